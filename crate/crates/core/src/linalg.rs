//! Exact rational and integer linear algebra.
//!
//! Everything here is dense and exact: rational matrices use
//! arbitrary-precision rationals, integer matrices use arbitrary-precision
//! integers. Ranks never exceed the rank of an ambient root system (at most
//! eight for a single ADE factor), so no sparsity or pivoting heuristics are
//! needed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// Dense matrix with exact rational entries, stored row-major.
///
/// Entries are kept in lowest terms with positive denominator (the invariant
/// maintained by [`BigRational`] itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        RatMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix::new(rows, cols, vec![BigRational::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from integer rows.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigRational {
        &mut self.entries[r * self.cols + c]
    }

    /// Reduced row echelon form. Row space is preserved and the result is
    /// idempotent: `rref(rref(m)) == rref(m)`.
    pub fn rref(&self) -> RatMatrix {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.get(pivot_row, col).recip();
            for c in col..m.cols {
                let v = m.get(pivot_row, c) * &inv;
                *m.get_mut(pivot_row, c) = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &factor * m.get(pivot_row, c);
                        *m.get_mut(r, c) = v;
                    }
                }
            }
            pivot_row += 1;
        }
        m
    }

    /// Rank via `rref`.
    pub fn rank(&self) -> usize {
        let r = self.rref();
        (0..r.rows)
            .filter(|&i| (0..r.cols).any(|j| !r.get(i, j).is_zero()))
            .count()
    }

    /// Basis of the right kernel `{ v : M v = 0 }`. The basis has
    /// `cols - rank` vectors, one per free column of the rref.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let r = self.rref();
        let mut pivot_of_row = Vec::new();
        for i in 0..r.rows {
            if let Some(j) = (0..r.cols).find(|&j| !r.get(i, j).is_zero()) {
                pivot_of_row.push(j);
            }
        }
        let pivot_cols: Vec<usize> = pivot_of_row.clone();
        let mut basis = Vec::new();
        for free in 0..r.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![BigRational::zero(); r.cols];
            v[free] = BigRational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }
}

/// Dense square matrix with arbitrary-precision integer entries.
///
/// Used for the matrix realization of Weyl-group elements in simple-root
/// coordinates; such matrices have determinant ±1 and permute the root set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), n * n, "entry count mismatch");
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "not square");
        IntMatrix::new(n, rows.iter().flatten().map(|&v| BigInt::from(v)).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::new(n, vec![BigInt::zero(); n * n]);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.n + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.n + c]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix::new(n, vec![BigInt::zero(); n * n]);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let add = a * other.get(k, j);
                    *out.get_mut(i, j) += add;
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::new(self.n, self.entries.iter().map(|e| -e).collect())
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                *out.get_mut(i, j) = self.get(j, i).clone();
            }
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn is_neg_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n).neg()
    }

    /// Matrix-vector product over `i64` coordinates (used for root images;
    /// root coordinates are small, so this cannot overflow in practice).
    pub fn apply_i64(&self, v: &[i64]) -> Vec<i64> {
        use num::ToPrimitive;
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                let s: BigInt = (0..self.n).map(|c| self.get(r, c) * BigInt::from(v[c])).sum();
                s.to_i64().expect("root coordinate overflow")
            })
            .collect()
    }

    /// Multiplicative order, by exact powering. Returns `None` if the order
    /// exceeds `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(src) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, src);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Monic characteristic polynomial `det(λI − M)` with exact integer
    /// coefficients, by minor expansion with column-subset memoization.
    pub fn char_poly(&self) -> UniPoly {
        let n = self.n;
        // entry_poly[i][j] = λδ_ij − m_ij
        let entry = |i: usize, j: usize| -> UniPoly {
            let mut c = vec![-self.get(i, j).clone()];
            if i == j {
                c.push(BigInt::one());
            }
            UniPoly::new(c)
        };
        // memo over bitmask of remaining columns; row index is n − popcount.
        let mut memo: HashMap<u32, UniPoly> = HashMap::new();
        memo.insert(0, UniPoly::one());
        fn go(mask: u32, n: usize, entry: &dyn Fn(usize, usize) -> UniPoly, memo: &mut HashMap<u32, UniPoly>) -> UniPoly {
            if let Some(p) = memo.get(&mask) {
                return p.clone();
            }
            let remaining = mask.count_ones() as usize;
            let row = n - remaining;
            let mut acc = UniPoly::zero();
            let mut pos = 0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let sub = go(mask & !(1 << col), n, entry, memo);
                let term = entry(row, col).mul(&sub);
                if pos % 2 == 0 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
                pos += 1;
            }
            memo.insert(mask, acc.clone());
            acc
        }
        let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
        go(full, n, &entry, &mut memo)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, ascending order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![BigInt::one()])
    }

    /// λ^k − 1
    pub fn power_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = -BigInt::one();
        c[k] = BigInt::one();
        UniPoly::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.coeffs.iter().enumerate() {
            c[i] += v;
        }
        UniPoly::new(c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in other.coeffs.iter().enumerate() {
            c[i] -= v;
        }
        UniPoly::new(c)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    /// Exact division; returns `None` when `other` does not divide `self`
    /// over ℤ[λ].
    pub fn exact_div(&self, other: &UniPoly) -> Option<UniPoly> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let d = other.degree();
        let lead = other.leading().unwrap();
        let mut quot = vec![BigInt::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return None;
            }
            let q = top / lead;
            for (i, b) in other.coeffs.iter().enumerate() {
                rem[k + i] -= &q * b;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(UniPoly::new(quot))
        } else {
            None
        }
    }

    /// Evaluates the polynomial at an integer matrix (Cayley–Hamilton checks).
    pub fn eval_matrix(&self, m: &IntMatrix) -> IntMatrix {
        let n = m.dim();
        let mut acc = IntMatrix::new(n, vec![BigInt::zero(); n * n]);
        // Horner
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                *acc.get_mut(i, i) += c;
            }
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            if k == 1 {
                write!(f, "l")?;
            } else if k > 1 {
                write!(f, "l^{k}")?;
            }
        }
        Ok(())
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
    d.sort_unstable();
    d
}

fn moebius(mut n: u64) -> i64 {
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| num::integer::gcd(*k, n) == 1).count() as u64
}

/// The n-th cyclotomic polynomial Φ_n, via the Möbius/divisor recursion
/// Φ_n(λ) = ∏_{d|n} (λ^d − 1)^{μ(n/d)}. Results are cached per process.
pub fn cyclotomic(n: u64) -> UniPoly {
    static CACHE: OnceLock<Mutex<BTreeMap<u64, UniPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for d in divisors(n) {
        match moebius(n / d) {
            1 => num = num.mul(&UniPoly::power_minus_one(d as usize)),
            -1 => den = den.mul(&UniPoly::power_minus_one(d as usize)),
            _ => {}
        }
    }
    let phi = num.exact_div(&den).expect("cyclotomic recursion divides exactly");
    cache.lock().unwrap().insert(n, phi.clone());
    phi
}

/// Splits a monic integer polynomial whose roots are all roots of unity of
/// order dividing `2h` into cyclotomic factors, and reports, for each
/// divisor `d` of `2h`, the number of eigenvalues that are primitive d-th
/// roots of unity (i.e. multiplicity of Φ_d times φ(d)).
///
/// Fails with [`Error::NotRootsOfUnity`] when a nontrivial factor remains
/// after exhausting the divisors, which signals a violated precondition.
pub fn cyclotomic_multiplicities(p: &UniPoly, h: u64) -> Result<BTreeMap<u64, u64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut q = p.clone();
    let mut out = BTreeMap::new();
    for d in divisors(2 * h) {
        let phi = cyclotomic(d);
        let mut e = 0u64;
        while let Some(next) = q.exact_div(&phi) {
            q = next;
            e += 1;
        }
        if e > 0 {
            out.insert(d, e * euler_phi(d));
        }
    }
    if q.degree() == 0 && q.is_monic() {
        Ok(out)
    } else {
        Err(Error::NotRootsOfUnity(2 * h))
    }
}

/// Fraction-free incremental span of integer vectors, used to decide
/// membership of roots in the span of a flat. Rows are kept in echelon form
/// with gcd-normalized, sign-normalized entries, so all arithmetic stays in
/// small integers.
#[derive(Debug, Clone, Default)]
pub(crate) struct IntSpan {
    rows: Vec<Vec<i64>>,
}

impl IntSpan {
    pub fn new() -> Self {
        IntSpan { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|&x| x != 0).unwrap();
            if v[pivot] == 0 {
                continue;
            }
            // v <- v*row[pivot] - row*v[pivot], then normalize by gcd
            let a = row[pivot];
            let b = v[pivot];
            for i in 0..v.len() {
                v[i] = v[i] * a - row[i] * b;
            }
            normalize_row(&mut v);
        }
        v
    }

    /// True if `v` lies in the current span.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Inserts `v`; returns true when the rank grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let r = self.reduce(v);
        if r.iter().all(|&x| x == 0) {
            return false;
        }
        let pos = self
            .rows
            .binary_search_by_key(&r.iter().position(|&x| x != 0).unwrap(), |row| {
                row.iter().position(|&x| x != 0).unwrap()
            })
            .unwrap_err();
        self.rows.insert(pos, r);
        true
    }
}

fn normalize_row(v: &mut [i64]) {
    let mut g: i64 = 0;
    for &x in v.iter() {
        g = num::integer::gcd(g, x.abs());
    }
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
    if let Some(&first) = v.iter().find(|&&x| x != 0) {
        if first < 0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}
