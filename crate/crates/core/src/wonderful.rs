//! Combinatorics of the minimal wonderful blow-up of a Weyl arrangement:
//! boundary-divisor census, blow-up order, and nested-set (SNC) tests.
//!
//! Only the combinatorial shadow of the blow-up is computed: boundary
//! divisors are indexed by the irreducible flats of the intersection
//! lattice, and a set of divisors has nonempty intersection exactly when
//! the corresponding flats form a nested set.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::roots::{AdeType, RootSystem};
use crate::strata::{classify, closure, intersection_lattice, orbit_classes, Flat};
use crate::{Error, Result};

/// One W-orbit of boundary divisors of the wonderful blow-up, indexed by an
/// irreducible flat. `blowup_level` is the dimension of the stratum at
/// which the divisor is created (codimension-1 strata are divisors from the
/// start).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorComponent {
    pub flat: Flat,
    pub orbit_size: u64,
    pub blowup_level: usize,
}

impl DivisorComponent {
    /// The irreducible type indexing this divisor class.
    pub fn divisor_type(&self) -> AdeType {
        self.flat
            .type_label
            .irreducible_factor()
            .expect("divisor components have irreducible type")
    }
}

/// All irreducible flats, grouped into W-orbits with exact counts, sorted
/// by (codim, type).
pub fn irreducible_flats(rs: &RootSystem) -> Vec<DivisorComponent> {
    let flats: Vec<Flat> = intersection_lattice(rs, rs.rank())
        .into_iter()
        .filter(|f| f.type_label.is_irreducible())
        .collect();
    orbit_classes(rs, &flats)
        .into_iter()
        .map(|c| DivisorComponent {
            blowup_level: rs.rank() - c.codim,
            orbit_size: c.orbit_size,
            flat: c.representative,
        })
        .collect()
}

/// Total divisor count per irreducible type.
pub fn divisor_census(rs: &RootSystem) -> Vec<(AdeType, u64)> {
    let mut counts: BTreeMap<AdeType, u64> = BTreeMap::new();
    for d in irreducible_flats(rs) {
        *counts.entry(d.divisor_type()).or_default() += d.orbit_size;
    }
    counts.into_iter().collect()
}

/// Blow-up order of the minimal wonderful blow-up: irreducible strata
/// grouped by stratum dimension, ascending (minimal dimension first),
/// ending with the codimension-2 strata. Codimension-1 strata are already
/// divisors and are never blown up.
pub fn blowup_order(rs: &RootSystem) -> Vec<(usize, Vec<AdeType>)> {
    let mut by_dim: BTreeMap<usize, Vec<AdeType>> = BTreeMap::new();
    for d in irreducible_flats(rs) {
        if d.flat.codim >= 2 {
            by_dim.entry(d.blowup_level).or_default().push(d.divisor_type());
        }
    }
    by_dim
        .into_iter()
        .map(|(dim, mut types)| {
            types.sort_unstable();
            types.dedup();
            (dim, types)
        })
        .collect()
}

/// A set of irreducible flats forming a nested set: every pairwise
/// incomparable subset of size ≥ 2 generates a flat whose irreducible
/// decomposition is exactly the members of that subset. Nested sets
/// characterize nonempty intersections of boundary divisors.
#[derive(Debug, Clone)]
pub struct NestedSet {
    pub members: Vec<Flat>,
}

impl NestedSet {
    pub fn new(rs: &RootSystem, members: Vec<Flat>) -> Result<NestedSet> {
        if is_nested(rs, &members)? {
            Ok(NestedSet { members })
        } else {
            Err(Error::Parse("flats do not form a nested set".into()))
        }
    }
}

/// Irreducible components of a closed flat, as canonical flat keys.
fn irreducible_components(rs: &RootSystem, indices: &[u16]) -> Vec<Vec<u16>> {
    let pt = classify(rs, indices).expect("closed set classifies");
    if pt.is_irreducible() {
        return vec![indices.to_vec()];
    }
    let coords = rs.positive_root_coords();
    // group the roots of the set by mutual non-orthogonality (transitive
    // closure); each class is one irreducible component
    let n = indices.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if comp[u] == usize::MAX
                    && rs.pairing(
                        &coords[indices[v] as usize],
                        &coords[indices[u] as usize],
                    ) != 0
                {
                    comp[u] = next;
                    stack.push(u);
                }
            }
        }
        next += 1;
    }
    let mut out = vec![Vec::new(); next];
    for (pos, &idx) in indices.iter().enumerate() {
        out[comp[pos]].push(idx);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

/// Nested-set test. All members must be irreducible flats.
pub fn is_nested(rs: &RootSystem, members: &[Flat]) -> Result<bool> {
    for f in members {
        if !f.type_label.is_irreducible() {
            return Err(Error::ReducibleFlat(f.type_label.to_string()));
        }
    }
    let k = members.len();
    if k > 64 {
        return Err(Error::Parse("nested-set test limited to 64 members".into()));
    }
    let keys: Vec<&Vec<u16>> = members.iter().map(|f| &f.root_indices).collect();
    let subset_of = |a: &[u16], b: &[u16]| a.iter().all(|x| b.binary_search(x).is_ok());
    for mask in 1u64..(1 << k) {
        if mask.count_ones() < 2 {
            continue;
        }
        let picked: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).collect();
        // antichain under root-set inclusion?
        let antichain = picked.iter().all(|&i| {
            picked
                .iter()
                .all(|&j| i == j || !(subset_of(keys[i], keys[j]) || subset_of(keys[j], keys[i])))
        });
        if !antichain {
            continue;
        }
        let mut union: Vec<u16> = Vec::new();
        for &i in &picked {
            union.extend_from_slice(keys[i]);
        }
        union.sort_unstable();
        union.dedup();
        let join = closure(rs, &union);
        let comps = irreducible_components(rs, &join.root_indices);
        let mut expected: Vec<Vec<u16>> = picked.iter().map(|&i| keys[i].clone()).collect();
        expected.sort();
        if comps != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximum cardinality of a nested set, by exhaustive depth-first search
/// over the irreducible flats. Must be at most the rank (the SNC divisor
/// has at most `rank` branches through any point). Exponential in the flat
/// count; intended for small and medium ranks.
pub fn max_snc_depth(rs: &RootSystem) -> usize {
    let components = irreducible_flats(rs);
    // expand orbits back into individual flats
    let mut flats: Vec<Flat> = Vec::new();
    {
        let all = intersection_lattice(rs, rs.rank());
        for f in all {
            if f.type_label.is_irreducible() {
                flats.push(f);
            }
        }
    }
    drop(components);
    // candidates sorted by codim so chains are found early
    flats.sort_by_key(|f| (f.codim, f.root_indices.clone()));
    let n = flats.len();
    let mut join_cache: HashMap<Vec<u16>, bool> = HashMap::new();
    // pairwise compatibility
    let mut compat = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let ok = pair_nested(rs, &flats[i], &flats[j], &mut join_cache);
            compat[i][j] = ok;
            compat[j][i] = ok;
        }
    }
    let mut best = 0;
    let mut current: Vec<usize> = Vec::new();
    fn extend(
        rs: &RootSystem,
        flats: &[Flat],
        compat: &[Vec<bool>],
        current: &mut Vec<usize>,
        candidates: &[usize],
        best: &mut usize,
    ) {
        *best = (*best).max(current.len());
        for (pos, &k) in candidates.iter().enumerate() {
            if current.len() + (candidates.len() - pos) <= *best {
                break;
            }
            let chosen: Vec<Flat> = current
                .iter()
                .chain(std::iter::once(&k))
                .map(|&i| flats[i].clone())
                .collect();
            if !is_nested(rs, &chosen).unwrap() {
                continue;
            }
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&m| compat[k][m])
                .collect();
            current.push(k);
            extend(rs, flats, compat, current, &next, best);
            current.pop();
        }
    }
    let all: Vec<usize> = (0..n).collect();
    extend(rs, &flats, &compat, &mut current, &all, &mut best);
    best
}

fn pair_nested(
    rs: &RootSystem,
    a: &Flat,
    b: &Flat,
    cache: &mut HashMap<Vec<u16>, bool>,
) -> bool {
    let subset = |x: &[u16], y: &[u16]| x.iter().all(|v| y.binary_search(v).is_ok());
    if subset(&a.root_indices, &b.root_indices) || subset(&b.root_indices, &a.root_indices) {
        return true;
    }
    let mut union = a.root_indices.clone();
    union.extend_from_slice(&b.root_indices);
    union.sort_unstable();
    union.dedup();
    if let Some(&v) = cache.get(&union) {
        return v;
    }
    let join = closure(rs, &union);
    let comps = irreducible_components(rs, &join.root_indices);
    let mut expected = vec![a.root_indices.clone(), b.root_indices.clone()];
    expected.sort();
    let v = comps == expected;
    cache.insert(union, v);
    v
}

/// JSON-ready census document.
#[derive(Debug, Clone, Serialize)]
pub struct DivisorCensus {
    pub r#type: String,
    pub divisors: Vec<DivisorCount>,
    pub blowup_order: Vec<BlowupStep>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisorCount {
    pub r#type: String,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlowupStep {
    pub dim: usize,
    pub types: Vec<String>,
}

pub fn census_document(rs: &RootSystem) -> DivisorCensus {
    DivisorCensus {
        r#type: rs.type_label().to_string(),
        divisors: divisor_census(rs)
            .into_iter()
            .map(|(t, count)| DivisorCount { r#type: t.to_string(), count })
            .collect(),
        blowup_order: blowup_order(rs)
            .into_iter()
            .map(|(dim, types)| BlowupStep {
                dim,
                types: types.iter().map(AdeType::to_string).collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{build_root_system, product_root_system};

    #[test]
    fn a2_divisors() {
        let rs = build_root_system(AdeType::a(2));
        let census = divisor_census(&rs);
        assert_eq!(
            census,
            vec![(AdeType::a(1), 3), (AdeType::a(2), 1)],
            "brute force over the 4 flats of the A2 arrangement"
        );
    }

    #[test]
    fn a1a1_codim2_flat_is_not_a_divisor() {
        let rs = product_root_system(&[AdeType::a(1), AdeType::a(1)]).unwrap();
        let census = divisor_census(&rs);
        assert_eq!(census, vec![(AdeType::a(1), 2)]);
        assert!(blowup_order(&rs).is_empty());
    }

    #[test]
    fn a3_divisors() {
        let rs = build_root_system(AdeType::a(3));
        let census = divisor_census(&rs);
        assert_eq!(
            census,
            vec![(AdeType::a(1), 6), (AdeType::a(2), 4), (AdeType::a(3), 1)]
        );
    }

    #[test]
    fn a2_blowup_order_only_origin() {
        let rs = build_root_system(AdeType::a(2));
        let order = blowup_order(&rs);
        assert_eq!(order, vec![(0, vec![AdeType::a(2)])]);
    }

    #[test]
    fn chains_are_nested() {
        let rs = build_root_system(AdeType::a(2));
        let h = closure(&rs, &[0]);
        let origin = closure(&rs, &[0, 1, 2]);
        assert!(is_nested(&rs, &[h.clone()]).unwrap());
        assert!(is_nested(&rs, &[h.clone(), origin.clone()]).unwrap());
        // two distinct hyperplanes join to the irreducible A2 origin: not nested
        let h2 = closure(&rs, &[1]);
        assert!(!is_nested(&rs, &[h, h2]).unwrap());
    }

    #[test]
    fn nested_rejects_reducible_members() {
        let rs = product_root_system(&[AdeType::a(1), AdeType::a(1)]).unwrap();
        let both = closure(&rs, &[0, 1]);
        assert!(matches!(is_nested(&rs, &[both]), Err(Error::ReducibleFlat(_))));
    }

    #[test]
    fn orthogonal_hyperplanes_are_nested() {
        let rs = product_root_system(&[AdeType::a(1), AdeType::a(1)]).unwrap();
        let h1 = closure(&rs, &[0]);
        let h2 = closure(&rs, &[1]);
        assert!(is_nested(&rs, &[h1, h2]).unwrap());
    }

    #[test]
    fn d4_four_orthogonal_hyperplanes_fail_only_jointly() {
        // In D4 the four hyperplanes e1±e2, e3±e4 are pairwise (and triple-)
        // nested, but the full antichain joins to the irreducible D4 origin.
        let rs = build_root_system(AdeType::d(4));
        let find = |amb: &[i64]| -> Flat {
            let idx = rs
                .positive_roots_ambient()
                .iter()
                .position(|r| r == amb)
                .expect("root present");
            closure(&rs, &[idx as u16])
        };
        let f1 = find(&[1, -1, 0, 0]);
        let f2 = find(&[1, 1, 0, 0]);
        let f3 = find(&[0, 0, 1, -1]);
        let f4 = find(&[0, 0, 1, 1]);
        let all = [f1, f2, f3, f4];
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(is_nested(&rs, &[all[i].clone(), all[j].clone()]).unwrap());
                for k in j + 1..4 {
                    assert!(is_nested(
                        &rs,
                        &[all[i].clone(), all[j].clone(), all[k].clone()]
                    )
                    .unwrap());
                }
            }
        }
        assert!(!is_nested(&rs, &all).unwrap());
    }

    #[test]
    fn max_depth_small() {
        assert_eq!(max_snc_depth(&build_root_system(AdeType::a(1))), 1);
        assert_eq!(max_snc_depth(&build_root_system(AdeType::a(2))), 2);
        assert_eq!(max_snc_depth(&build_root_system(AdeType::a(3))), 3);
        let a1a1 = product_root_system(&[AdeType::a(1), AdeType::a(1)]).unwrap();
        assert_eq!(max_snc_depth(&a1a1), 2);
    }

    #[test]
    fn max_depth_rank4() {
        assert_eq!(max_snc_depth(&build_root_system(AdeType::a(4))), 4);
        assert_eq!(max_snc_depth(&build_root_system(AdeType::d(4))), 4);
    }

    #[test]
    fn divisor_census_agrees_with_strata_census() {
        use crate::strata::orbit_census;
        for t in [AdeType::a(3), AdeType::d(4)] {
            let rs = build_root_system(t);
            let from_divisors = divisor_census(&rs);
            let mut from_strata: BTreeMap<AdeType, u64> = BTreeMap::new();
            for codim in 1..=rs.rank() {
                for c in orbit_census(&rs, codim) {
                    if let Some(t) = c.type_label.irreducible_factor() {
                        *from_strata.entry(t).or_default() += c.orbit_size;
                    }
                }
            }
            assert_eq!(from_divisors, from_strata.into_iter().collect::<Vec<_>>());
        }
    }
}
