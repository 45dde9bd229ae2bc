//! ADE root systems, Weyl elements, and Coxeter data.
//!
//! Root systems are built in standard integer realizations:
//!
//! * `A_n`: `{e_i − e_j, i ≠ j}` in the sum-zero sublattice of ℤ^{n+1};
//! * `D_n`: `{±e_i ± e_j, i < j}` in ℤ^n;
//! * `E_8`: the even coordinate realization, scaled by 2 so that all
//!   coordinates are integers (112 vectors `±2e_i ± 2e_j` and 128 vectors
//!   `(±1)^8` with an even number of minus signs); `E_7` and `E_6` are the
//!   sub-systems of `E_8` spanned by the first seven resp. six simple roots
//!   (equivalently, the roots orthogonal to one resp. two chosen roots).
//!
//! Simple roots follow the Bourbaki labeling throughout. Weyl elements are
//! exact integer matrices acting on simple-root coordinates.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigUint, One};
use serde::{Serialize, Serializer};

use crate::linalg::{cyclotomic_multiplicities, euler_phi, IntMatrix};
use crate::{Error, Result};

/// The three simply-laced families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdeFamily {
    A,
    D,
    E,
}

impl fmt::Display for AdeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeFamily::A => write!(f, "A"),
            AdeFamily::D => write!(f, "D"),
            AdeFamily::E => write!(f, "E"),
        }
    }
}

/// An irreducible ADE singularity label. The index is the Milnor number,
/// which equals the rank of the associated root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AdeType {
    family: AdeFamily,
    index: u32,
}

impl AdeType {
    /// Validates the index: `A_n` needs `n ≥ 1`, `D_n` needs `n ≥ 4`
    /// (`D_3` is rejected rather than aliased to `A_3`), `E_n` needs
    /// `n ∈ {6,7,8}`.
    pub fn new(family: AdeFamily, index: u32) -> Result<AdeType> {
        let ok = match family {
            AdeFamily::A => index >= 1,
            AdeFamily::D => index >= 4,
            AdeFamily::E => (6..=8).contains(&index),
        };
        if ok {
            Ok(AdeType { family, index })
        } else {
            Err(Error::InvalidType(format!("{family}{index}")))
        }
    }

    pub fn a(n: u32) -> AdeType {
        AdeType::new(AdeFamily::A, n).unwrap()
    }

    pub fn d(n: u32) -> AdeType {
        AdeType::new(AdeFamily::D, n).unwrap()
    }

    pub fn e(n: u32) -> AdeType {
        AdeType::new(AdeFamily::E, n).unwrap()
    }

    pub fn family(&self) -> AdeFamily {
        self.family
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Rank of the root system = Milnor number of the singularity.
    pub fn rank(&self) -> usize {
        self.index as usize
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.index as usize;
        match self.family {
            AdeFamily::A => n * (n + 1) / 2,
            AdeFamily::D => n * (n - 1),
            AdeFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    /// Edges of the Dynkin diagram in Bourbaki labeling (0-based vertices).
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.index as usize;
        match self.family {
            AdeFamily::A => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            AdeFamily::D => {
                let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            AdeFamily::E => {
                // Bourbaki: chain 1-3-4-5-6(-7)(-8), with 2 attached to 4.
                let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if n >= 7 {
                    e.push((5, 6));
                }
                if n == 8 {
                    e.push((6, 7));
                }
                e
            }
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<AdeType> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') | Some('a') => AdeFamily::A,
            Some('D') | Some('d') => AdeFamily::D,
            Some('E') | Some('e') => AdeFamily::E,
            _ => return Err(Error::Parse(format!("expected ADE type, got `{s}`"))),
        };
        let index: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad type index in `{s}`")))?;
        AdeType::new(family, index)
    }
}

impl Serialize for AdeType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A finite multiset of irreducible ADE types, stored canonically sorted
/// (family order A < D < E, then index). Equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductType {
    factors: Vec<AdeType>,
}

impl ProductType {
    pub fn new(mut factors: Vec<AdeType>) -> Result<ProductType> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        factors.sort();
        Ok(ProductType { factors })
    }

    pub fn single(t: AdeType) -> ProductType {
        ProductType { factors: vec![t] }
    }

    pub fn factors(&self) -> &[AdeType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(AdeType::rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    /// The unique factor of an irreducible product.
    pub fn irreducible_factor(&self) -> Option<AdeType> {
        if self.is_irreducible() {
            Some(self.factors[0])
        } else {
            None
        }
    }

    pub fn positive_root_count(&self) -> usize {
        self.factors.iter().map(AdeType::positive_root_count).sum()
    }
}

impl fmt::Display for ProductType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(AdeType::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for ProductType {
    type Err = Error;

    /// Accepts comma-separated (`"A1,A2,A2"`) or `x`-separated
    /// (`"A1xA2xA2"`) lists, whitespace-insensitive; canonicalizes on parse.
    fn from_str(s: &str) -> Result<ProductType> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parts: Vec<&str> = cleaned.split([',', 'x', '*']).filter(|p| !p.is_empty()).collect();
        if parts.is_empty() {
            return Err(Error::EmptyProduct);
        }
        let factors = parts
            .iter()
            .map(|p| p.parse::<AdeType>())
            .collect::<Result<Vec<_>>>()?;
        ProductType::new(factors)
    }
}

impl Serialize for ProductType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A Weyl group element as an exact integer matrix acting on simple-root
/// coordinates, with an optional word in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        WeylElement { matrix: IntMatrix::identity(rank), word: Some(vec![]) }
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => {
                let mut w = a.clone();
                w.extend_from_slice(b);
                Some(w)
            }
            _ => None,
        };
        WeylElement { matrix: self.matrix.mul(&other.matrix), word }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Multiplicative order by exact matrix powering.
    pub fn order(&self, cap: u64) -> Option<u64> {
        self.matrix.order(cap)
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det()
    }

    pub fn pow(&self, k: u64) -> WeylElement {
        let word = self.word.as_ref().map(|w| w.iter().copied().cycle().take(w.len() * k as usize).collect());
        WeylElement { matrix: self.matrix.pow(k), word }
    }
}

/// A root system in a standard integer realization, together with the data
/// needed for exact Weyl-group computations: simple-root coordinates of all
/// roots, the Cartan matrix, and the simple-reflection permutations of the
/// positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    type_label: ProductType,
    ambient_dim: usize,
    rank: usize,
    simple_ambient: Vec<Vec<i64>>,
    /// Positive roots in ambient coordinates, sorted by (height, coords).
    positive_ambient: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, same order.
    positive_coords: Vec<Vec<i64>>,
    cartan: IntMatrix,
    /// Cartan matrix entries as i64 for fast pairing computations.
    cartan_i64: Vec<Vec<i64>>,
    /// `simple_index[i]` = position of simple root i in the positive list.
    simple_index: Vec<usize>,
    /// Map from simple-root coordinates to positive-root index.
    coord_index: HashMap<Vec<i64>, usize>,
    /// For each simple reflection, the induced permutation of the positive
    /// roots (sign-normalized).
    gen_perms: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Builds the root system of a single irreducible type.
    pub fn build(t: AdeType) -> RootSystem {
        let simple_ambient = simple_roots_ambient(t);
        RootSystem::from_simples(ProductType::single(t), simple_ambient)
    }

    /// Orthogonal direct sum of irreducible systems. Factors are
    /// canonically reordered; the root count and rank are sums.
    pub fn product(ts: &[AdeType]) -> Result<RootSystem> {
        let label = ProductType::new(ts.to_vec())?;
        let blocks: Vec<Vec<Vec<i64>>> =
            label.factors().iter().map(|&t| simple_roots_ambient(t)).collect();
        let total_dim: usize = blocks.iter().map(|b| b[0].len()).sum();
        let mut simple_ambient = Vec::new();
        let mut offset = 0;
        for block in &blocks {
            let d = block[0].len();
            for root in block {
                let mut v = vec![0i64; total_dim];
                v[offset..offset + d].copy_from_slice(root);
                simple_ambient.push(v);
            }
            offset += d;
        }
        Ok(RootSystem::from_simples(label, simple_ambient))
    }

    fn from_simples(type_label: ProductType, simple_ambient: Vec<Vec<i64>>) -> RootSystem {
        let rank = simple_ambient.len();
        let ambient_dim = simple_ambient[0].len();

        // Cartan matrix from ambient inner products; all roots of a factor
        // share the same norm, so a_ij = 2(α_i,α_j)/(α_j,α_j) is exact.
        let mut cartan_i64 = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = 2 * dot(&simple_ambient[i], &simple_ambient[j]);
                let den = dot(&simple_ambient[j], &simple_ambient[j]);
                debug_assert_eq!(num % den, 0);
                cartan_i64[i][j] = num / den;
            }
        }
        let cartan = IntMatrix::from_rows(&cartan_i64);

        // Generate all roots, in simple-root coordinates, by closing the
        // simples under the simple reflections.
        let refl = |i: usize, v: &[i64]| -> Vec<i64> {
            // s_i(v) = v − (v^T A e_i) e_i in simple-root coordinates
            let c: i64 = (0..rank).map(|j| v[j] * cartan_i64[j][i]).sum();
            let mut w = v.to_vec();
            w[i] -= c;
            w
        };
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push(e);
        }
        while let Some(v) = queue.pop() {
            for i in 0..rank {
                let w = refl(i, &v);
                if !seen.contains_key(&w) {
                    seen.insert(w.clone(), ());
                    queue.push(w);
                }
            }
        }

        let mut positive_coords: Vec<Vec<i64>> = seen
            .keys()
            .filter(|v| v.iter().all(|&x| x >= 0))
            .cloned()
            .collect();
        positive_coords.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));

        let positive_ambient: Vec<Vec<i64>> = positive_coords
            .iter()
            .map(|c| {
                let mut v = vec![0i64; ambient_dim];
                for (i, &ci) in c.iter().enumerate() {
                    for (k, x) in v.iter_mut().enumerate() {
                        *x += ci * simple_ambient[i][k];
                    }
                }
                v
            })
            .collect();

        let coord_index: HashMap<Vec<i64>, usize> = positive_coords
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();

        let simple_index: Vec<usize> = (0..rank)
            .map(|i| {
                let mut e = vec![0i64; rank];
                e[i] = 1;
                coord_index[&e]
            })
            .collect();

        let gen_perms: Vec<Vec<usize>> = (0..rank)
            .map(|i| {
                positive_coords
                    .iter()
                    .map(|v| {
                        let w = refl(i, v);
                        if let Some(&idx) = coord_index.get(&w) {
                            idx
                        } else {
                            let neg: Vec<i64> = w.iter().map(|&x| -x).collect();
                            coord_index[&neg]
                        }
                    })
                    .collect()
            })
            .collect();

        RootSystem {
            type_label,
            ambient_dim,
            rank,
            simple_ambient,
            positive_ambient,
            positive_coords,
            cartan,
            cartan_i64,
            simple_index,
            coord_index,
            gen_perms,
        }
    }

    pub fn type_label(&self) -> &ProductType {
        &self.type_label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Total number of roots (positives and negatives).
    pub fn num_roots(&self) -> usize {
        2 * self.positive_coords.len()
    }

    /// Number of positive roots = number of reflection hyperplanes.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_coords.len()
    }

    pub fn hyperplane_count(&self) -> usize {
        self.num_positive_roots()
    }

    /// All roots in ambient coordinates (positives followed by negatives).
    pub fn roots_ambient(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive_ambient.clone();
        all.extend(self.positive_ambient.iter().map(|v| v.iter().map(|&x| -x).collect::<Vec<_>>()));
        all
    }

    pub fn positive_roots_ambient(&self) -> &[Vec<i64>] {
        &self.positive_ambient
    }

    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_coords
    }

    pub fn simple_roots_ambient(&self) -> &[Vec<i64>] {
        &self.simple_ambient
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    /// Position of simple root `i` in the positive-root list.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_index[i]
    }

    /// Positive-root index of the given simple-root coordinate vector, up
    /// to sign.
    pub fn index_of_coords(&self, coords: &[i64]) -> Option<usize> {
        self.coord_index.get(coords).copied().or_else(|| {
            let neg: Vec<i64> = coords.iter().map(|&x| -x).collect();
            self.coord_index.get(&neg).copied()
        })
    }

    /// Pairing `x^T A y` in simple-root coordinates (twice the inner
    /// product normalized so roots have pairing 2 with themselves).
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| x[i] * self.cartan_i64[i][j] * y[j]).sum::<i64>())
            .sum()
    }

    /// The simple reflection `s_i` as a Weyl element.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if i >= self.rank {
            return Err(Error::BadGenerator { index: i, rank: self.rank });
        }
        let mut rows = vec![vec![0i64; self.rank]; self.rank];
        for (r, row) in rows.iter_mut().enumerate() {
            row[r] = 1;
        }
        // columns are images of basis vectors: s_i(α_j) = α_j − a_{ji} α_i
        for j in 0..self.rank {
            rows[i][j] -= self.cartan_i64[j][i];
        }
        Ok(WeylElement { matrix: IntMatrix::from_rows(&rows), word: Some(vec![i]) })
    }

    /// The orthogonal reflection in the positive root with the given index;
    /// an involution.
    pub fn reflection(&self, root_index: usize) -> Result<WeylElement> {
        let count = self.num_positive_roots();
        if root_index >= count {
            return Err(Error::BadRootIndex { index: root_index, count });
        }
        let c = &self.positive_coords[root_index];
        // s_r(e_j) = e_j − (e_j^T A c) c
        let mut rows = vec![vec![0i64; self.rank]; self.rank];
        for j in 0..self.rank {
            let coef: i64 = (0..self.rank).map(|k| self.cartan_i64[j][k] * c[k]).sum();
            for r in 0..self.rank {
                rows[r][j] = if r == j { 1 } else { 0 };
                rows[r][j] -= coef * c[r];
            }
        }
        Ok(WeylElement { matrix: IntMatrix::from_rows(&rows), word: None })
    }

    /// The Coxeter element `s_1 ⋯ s_n` in simple-root order.
    pub fn coxeter_element(&self) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        for i in 0..self.rank {
            w = w.compose(&self.simple_reflection(i).unwrap());
        }
        w
    }

    /// Applies a Weyl element to simple-root coordinates.
    pub fn apply(&self, w: &WeylElement, coords: &[i64]) -> Vec<i64> {
        w.matrix.apply_i64(coords)
    }

    /// Length = number of positive roots mapped to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_coords
            .iter()
            .filter(|c| {
                let img = w.matrix.apply_i64(c);
                img.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
            })
            .count()
    }

    /// True if the element permutes the root set (sanity check used by
    /// tests: every genuine Weyl element does).
    pub fn preserves_roots(&self, w: &WeylElement) -> bool {
        self.positive_coords.iter().all(|c| {
            let img = w.matrix.apply_i64(c);
            self.index_of_coords(&img).is_some()
        })
    }

    /// The longest element `w_0`, computed greedily by appending any simple
    /// reflection that increases length; returns a reduced word of length
    /// equal to the number of positive roots.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        'outer: loop {
            for i in 0..self.rank {
                // ℓ(w s_i) > ℓ(w) iff w(α_i) > 0
                let mut e = vec![0i64; self.rank];
                e[i] = 1;
                let img = w.matrix.apply_i64(&e);
                let positive = img.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
                if positive {
                    w = w.compose(&self.simple_reflection(i).unwrap());
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The permutation of positive-root indices induced by simple
    /// reflection `i` (signs normalized).
    pub fn generator_permutation(&self, i: usize) -> &[usize] {
        &self.gen_perms[i]
    }

    /// The signed permutation of the roots induced by a Weyl element:
    /// entry `r` is the index of the image of positive root `r`, offset by
    /// the number of positive roots when the image is negative. Unlike the
    /// action on root lines, this representation is faithful (−1 ∈ W acts
    /// trivially on lines for some types, e.g. D4).
    pub fn signed_perm(&self, w: &WeylElement) -> Vec<u32> {
        let n = self.num_positive_roots() as u32;
        self.positive_coords
            .iter()
            .map(|c| {
                let img = w.matrix.apply_i64(c);
                if let Some(&idx) = self.coord_index.get(&img) {
                    idx as u32
                } else {
                    let neg: Vec<i64> = img.iter().map(|&x| -x).collect();
                    self.coord_index[&neg] as u32 + n
                }
            })
            .collect()
    }

    /// Enumerates the whole Weyl group as signed permutations of the
    /// roots (a faithful action). Feasible through rank 6
    /// (|W(E6)| = 51840); larger groups should use `weyl_group_order`.
    pub fn enumerate_group(&self) -> Vec<Vec<u32>> {
        let n = self.num_positive_roots() as u32;
        let id: Vec<u32> = (0..n).collect();
        let gens: Vec<Vec<u32>> = (0..self.rank)
            .map(|i| self.signed_perm(&self.simple_reflection(i).unwrap()))
            .collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head].clone();
            head += 1;
            for g in &gens {
                let next = signed_perm::compose(g, &cur, n);
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        queue
    }

    /// True when `a` and `b` are conjugate in W, decided by exhaustive
    /// search over the enumerated group (rank ≤ 6 scale).
    pub fn conjugate_in_group(&self, a: &WeylElement, b: &WeylElement) -> bool {
        let n = self.num_positive_roots() as u32;
        let pa = self.signed_perm(a);
        let pb = self.signed_perm(b);
        self.enumerate_group().into_iter().any(|g| {
            let gi = signed_perm::inverse(&g, n);
            signed_perm::compose(&signed_perm::compose(&g, &pa, n), &gi, n) == pb
        })
    }
}

/// Signed permutations of the root set: values below `n` are positive-root
/// indices, values in `[n, 2n)` are their negatives.
pub mod signed_perm {
    pub fn flip(x: u32, n: u32) -> u32 {
        if x < n {
            x + n
        } else {
            x - n
        }
    }

    /// Image of the (possibly negative) root `x` under `p`.
    pub fn apply(p: &[u32], x: u32, n: u32) -> u32 {
        if x < n {
            p[x as usize]
        } else {
            flip(p[(x - n) as usize], n)
        }
    }

    /// `g ∘ f` (first `f`, then `g`).
    pub fn compose(g: &[u32], f: &[u32], n: u32) -> Vec<u32> {
        f.iter().map(|&x| apply(g, x, n)).collect()
    }

    pub fn inverse(p: &[u32], n: u32) -> Vec<u32> {
        let mut out = vec![0u32; n as usize];
        for (r, &img) in p.iter().enumerate() {
            if img < n {
                out[img as usize] = r as u32;
            } else {
                out[(img - n) as usize] = r as u32 + n;
            }
        }
        out
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Bourbaki simple roots in the standard ambient realization.
fn simple_roots_ambient(t: AdeType) -> Vec<Vec<i64>> {
    let n = t.index as usize;
    match t.family {
        AdeFamily::A => (0..n)
            .map(|i| {
                let mut v = vec![0i64; n + 1];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect(),
        AdeFamily::D => {
            let mut roots: Vec<Vec<i64>> = (0..n - 1)
                .map(|i| {
                    let mut v = vec![0i64; n];
                    v[i] = 1;
                    v[i + 1] = -1;
                    v
                })
                .collect();
            let mut last = vec![0i64; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            roots.push(last);
            roots
        }
        AdeFamily::E => {
            // E8 simple roots in the even coordinate system, scaled by 2;
            // E7 and E6 take the first 7 resp. 6 of them.
            let all: Vec<Vec<i64>> = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                vec![2, 2, 0, 0, 0, 0, 0, 0],
                vec![-2, 2, 0, 0, 0, 0, 0, 0],
                vec![0, -2, 2, 0, 0, 0, 0, 0],
                vec![0, 0, -2, 2, 0, 0, 0, 0],
                vec![0, 0, 0, -2, 2, 0, 0, 0],
                vec![0, 0, 0, 0, -2, 2, 0, 0],
                vec![0, 0, 0, 0, 0, -2, 2, 0],
            ];
            all.into_iter().take(n).collect()
        }
    }
}

/// Builds the root system of one irreducible ADE type.
pub fn build_root_system(t: AdeType) -> RootSystem {
    RootSystem::build(t)
}

/// Orthogonal direct sum of root systems for a list of types.
pub fn product_root_system(ts: &[AdeType]) -> Result<RootSystem> {
    RootSystem::product(ts)
}

/// The Coxeter element of the system (product of all simple reflections in
/// simple-root order).
pub fn coxeter_element(rs: &RootSystem) -> WeylElement {
    rs.coxeter_element()
}

/// The Coxeter number: multiplicative order of the Coxeter element, found
/// by exact matrix powering.
pub fn coxeter_number(t: AdeType) -> u64 {
    let rs = RootSystem::build(t);
    rs.coxeter_element()
        .order(4 * t.rank() as u64 + 4)
        .expect("Coxeter element order exceeds bound")
}

/// The longest element of the Weyl group, with a reduced word.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    rs.longest_element()
}

/// Exponents of the Weyl group: the multiset `{m_j}` with Coxeter-element
/// eigenvalues `exp(2πi m_j / h)`, extracted from the cyclotomic
/// factorization of the characteristic polynomial; sorted ascending.
pub fn exponents(t: AdeType) -> Result<Vec<u64>> {
    let rs = RootSystem::build(t);
    let c = rs.coxeter_element();
    let h = c.order(4 * t.rank() as u64 + 4).expect("Coxeter element order exceeds bound");
    let mults = cyclotomic_multiplicities(&c.matrix.char_poly(), h)?;
    let mut exps = Vec::new();
    for (d, count) in mults {
        let each = count / euler_phi(d);
        for j in 1..=d {
            if num::integer::gcd(j, d) == 1 {
                for _ in 0..each {
                    exps.push(h / d * j);
                }
            }
        }
    }
    exps.sort_unstable();
    Ok(exps)
}

/// Order of the Weyl group: per irreducible factor the product of
/// `(m_j + 1)` over the exponents, multiplied across factors.
pub fn weyl_group_order(t: &ProductType) -> BigUint {
    let mut order = BigUint::one();
    for &factor in t.factors() {
        for m in exponents(factor).expect("Coxeter eigenvalues are roots of unity") {
            order *= BigUint::from(m + 1);
        }
    }
    order
}

/// The reflection in the positive root with the given index.
pub fn reflection(rs: &RootSystem, root_index: usize) -> Result<WeylElement> {
    rs.reflection(root_index)
}
