//! Intersection lattice of the Weyl arrangement and its W-orbit censuses.
//!
//! A flat (stratum closure) is encoded canonically by the sorted set of
//! positive-root indices of the closed sub-root system `R_Z = R ∩ Z^⊥`; its
//! codimension equals the rank of the spanned roots, and its type is the
//! parabolic sub-root-system type.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::linalg::IntSpan;
use crate::roots::{AdeType, ProductType, RootSystem};
use crate::{Error, Result};

/// A flat of the arrangement: a canonical key (sorted positive-root indices
/// of `R_Z`), its codimension, and its parabolic type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Flat {
    pub root_indices: Vec<u16>,
    pub codim: usize,
    pub type_label: ProductType,
}

/// One W-orbit of flats of a fixed codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumClass {
    pub type_label: ProductType,
    pub codim: usize,
    pub orbit_size: u64,
    pub representative: Flat,
}

/// Closure of a set of positive roots: all positive roots lying in their
/// rational span. The result is exactly a full sub-root system cut out by a
/// subspace, so the key is canonical.
pub fn closure(rs: &RootSystem, indices: &[u16]) -> Flat {
    let coords = rs.positive_root_coords();
    let mut span = IntSpan::new();
    for &i in indices {
        span.insert(&coords[i as usize]);
    }
    close_span(rs, &span)
}

fn close_span(rs: &RootSystem, span: &IntSpan) -> Flat {
    let coords = rs.positive_root_coords();
    let root_indices: Vec<u16> = (0..coords.len())
        .filter(|&i| span.contains(&coords[i]))
        .map(|i| i as u16)
        .collect();
    let codim = span.rank();
    let type_label = classify(rs, &root_indices)
        .expect("closure of a root span is a full ADE sub-root system");
    Flat { root_indices, codim, type_label }
}

/// Simple system of a closed set of positive roots: the elements not
/// expressible as a sum of two members of the set.
fn simple_system(rs: &RootSystem, indices: &[u16]) -> Vec<u16> {
    let coords = rs.positive_root_coords();
    let members: HashSet<&Vec<i64>> = indices.iter().map(|&i| &coords[i as usize]).collect();
    indices
        .iter()
        .copied()
        .filter(|&i| {
            let p = &coords[i as usize];
            !indices.iter().any(|&j| {
                let q = &coords[j as usize];
                let diff: Vec<i64> = p.iter().zip(q).map(|(a, b)| a - b).collect();
                j != i && diff.iter().any(|&x| x > 0) && members.contains(&diff)
            })
        })
        .collect()
}

/// Classifies a closed set of positive roots as a product of irreducible
/// ADE types, via the connected components of its simple system. Each
/// component is identified by (rank, positive-root count, branch vertex).
pub fn classify(rs: &RootSystem, indices: &[u16]) -> Result<ProductType> {
    let coords = rs.positive_root_coords();
    let simples = simple_system(rs, indices);
    let k = simples.len();
    // connected components under nonzero pairing
    let mut comp = vec![usize::MAX; k];
    let mut next = 0;
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = next;
        while let Some(v) = stack.pop() {
            for u in 0..k {
                if comp[u] == usize::MAX
                    && rs.pairing(&coords[simples[v] as usize], &coords[simples[u] as usize]) != 0
                {
                    comp[u] = next;
                    stack.push(u);
                }
            }
        }
        next += 1;
    }
    // assign every root of the set to the unique component it pairs with
    let mut counts = vec![0usize; next];
    for &i in indices {
        let p = &coords[i as usize];
        let c = (0..k)
            .find(|&s| rs.pairing(p, &coords[simples[s] as usize]) != 0)
            .map(|s| comp[s])
            .expect("root orthogonal to the whole simple system");
        counts[c] += 1;
    }
    let mut factors = Vec::with_capacity(next);
    for c in 0..next {
        let rank = comp.iter().filter(|&&x| x == c).count();
        let positive = counts[c];
        let members: Vec<u16> = (0..k).filter(|&s| comp[s] == c).map(|s| simples[s]).collect();
        let has_branch = members.iter().any(|&m| {
            members
                .iter()
                .filter(|&&o| o != m)
                .filter(|&&o| rs.pairing(&coords[m as usize], &coords[o as usize]) != 0)
                .count()
            >= 3
        });
        let family = if !has_branch {
            crate::roots::AdeFamily::A
        } else if positive == rank * (rank - 1) {
            crate::roots::AdeFamily::D
        } else {
            crate::roots::AdeFamily::E
        };
        let t = AdeType::new(family, rank as u32)
            .map_err(|_| Error::UnclassifiableComponent { rank, positive })?;
        if t.positive_root_count() != positive {
            return Err(Error::UnclassifiableComponent { rank, positive });
        }
        factors.push(t);
    }
    ProductType::new(factors)
}

/// Parabolic type of a closed flat.
pub fn flat_type(rs: &RootSystem, f: &Flat) -> Result<ProductType> {
    classify(rs, &f.root_indices)
}

/// All flats of codimension ≤ `max_codim`, built level by level:
/// codimension-1 flats are the hyperplanes, and each next level consists of
/// deduplicated closures of (flat ∩ hyperplane).
pub fn intersection_lattice(rs: &RootSystem, max_codim: usize) -> Vec<Flat> {
    let max_codim = max_codim.min(rs.rank());
    let mut all: Vec<Flat> = Vec::new();
    if max_codim == 0 {
        return all;
    }
    let coords = rs.positive_root_coords();
    let n = coords.len();
    // level 1: one flat per hyperplane
    let mut level: Vec<(Vec<u16>, IntSpan)> = (0..n)
        .map(|i| {
            let mut span = IntSpan::new();
            span.insert(&coords[i]);
            (vec![i as u16], span)
        })
        .collect();
    for (key, _) in &level {
        all.push(Flat {
            root_indices: key.clone(),
            codim: 1,
            type_label: classify(rs, key).expect("hyperplane classifies as A1"),
        });
    }
    for _codim in 2..=max_codim {
        let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
        let mut next_level = Vec::new();
        for (key, span) in &level {
            for p in 0..n {
                if key.binary_search(&(p as u16)).is_ok() {
                    continue;
                }
                if span.contains(&coords[p]) {
                    continue;
                }
                let mut bigger = span.clone();
                bigger.insert(&coords[p]);
                let flat = close_span(rs, &bigger);
                if seen.insert(flat.root_indices.clone()) {
                    next_level.push((flat.root_indices.clone(), bigger));
                    all.push(flat);
                }
            }
        }
        level = next_level;
    }
    all.sort();
    all
}

/// Applies a simple-reflection permutation to a flat key.
fn apply_perm(perm: &[usize], key: &[u16]) -> Vec<u16> {
    let mut out: Vec<u16> = key.iter().map(|&i| perm[i as usize] as u16).collect();
    out.sort_unstable();
    out
}

/// Partitions the given flats into W-orbits by BFS under the generator
/// action on canonical keys. Orbit sizes are exact; per the bijection with
/// parabolic sub-root systems each orbit size equals `|W : N_W(W_Z)|`.
pub fn orbit_classes(rs: &RootSystem, flats: &[Flat]) -> Vec<StratumClass> {
    let perms: Vec<&[usize]> = (0..rs.rank()).map(|i| rs.generator_permutation(i)).collect();
    let mut remaining: BTreeSet<Vec<u16>> =
        flats.iter().map(|f| f.root_indices.clone()).collect();
    let by_key: BTreeMap<Vec<u16>, &Flat> =
        flats.iter().map(|f| (f.root_indices.clone(), f)).collect();
    let mut classes = Vec::new();
    while let Some(start) = remaining.iter().next().cloned() {
        let mut orbit: BTreeSet<Vec<u16>> = BTreeSet::new();
        orbit.insert(start.clone());
        let mut queue = vec![start.clone()];
        while let Some(key) = queue.pop() {
            for perm in &perms {
                let img = apply_perm(perm, &key);
                if orbit.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        for key in &orbit {
            remaining.remove(key);
        }
        let rep_key = orbit.iter().next().unwrap().clone();
        let rep = by_key
            .get(&rep_key)
            .expect("orbit left the input set: input was not W-stable")
            .to_owned()
            .clone();
        classes.push(StratumClass {
            type_label: rep.type_label.clone(),
            codim: rep.codim,
            orbit_size: orbit.len() as u64,
            representative: rep,
        });
    }
    classes.sort_by(|a, b| {
        (a.codim, &a.type_label, a.orbit_size, &a.representative)
            .cmp(&(b.codim, &b.type_label, b.orbit_size, &b.representative))
    });
    classes
}

/// W-orbit census of the flats at one codimension.
pub fn orbit_census(rs: &RootSystem, codim: usize) -> Vec<StratumClass> {
    let flats: Vec<Flat> = intersection_lattice(rs, codim)
        .into_iter()
        .filter(|f| f.codim == codim)
        .collect();
    orbit_classes(rs, &flats)
}

/// Full-subdiagram criterion: true iff some induced subdiagram of the
/// ambient Dynkin diagram has connected components of exactly the candidate
/// multiset of types. Decided by exhaustive vertex-subset search.
pub fn has_stratum_of_type(ambient: AdeType, candidate: &ProductType) -> bool {
    let n = ambient.rank();
    if candidate.rank() > n {
        return false;
    }
    let edges = ambient.dynkin_edges();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    'subsets: for mask in 1u32..(1 << n) {
        if mask.count_ones() as usize != candidate.rank() {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let mut comp_types = Vec::new();
        let mut seen = vec![false; n];
        for &start in &verts {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut comp = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if mask & (1 << u) != 0 && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                        comp.push(u);
                    }
                }
            }
            match component_diagram_type(&comp, &adj, mask) {
                Some(t) => comp_types.push(t),
                None => continue 'subsets,
            }
        }
        if let Ok(pt) = ProductType::new(comp_types) {
            if pt == *candidate {
                return true;
            }
        }
    }
    false
}

/// Type of one connected induced subdiagram: a path is `A_k`; a single
/// degree-3 vertex with sorted branch lengths (1,1,k) is `D_{k+3}`,
/// (1,2,2)/(1,2,3)/(1,2,4) are E6/E7/E8.
fn component_diagram_type(comp: &[usize], adj: &[Vec<usize>], mask: u32) -> Option<AdeType> {
    let deg = |v: usize| -> usize {
        adj[v].iter().filter(|&&u| mask & (1 << u) != 0).count()
    };
    let k = comp.len();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
    match branch.len() {
        0 => AdeType::new(crate::roots::AdeFamily::A, k as u32).ok(),
        1 => {
            let b = branch[0];
            if deg(b) != 3 {
                return None;
            }
            let mut lens: Vec<usize> = adj[b]
                .iter()
                .filter(|&&u| mask & (1 << u) != 0)
                .map(|&u| {
                    // walk away from the branch vertex
                    let mut len = 1;
                    let mut prev = b;
                    let mut cur = u;
                    loop {
                        let nexts: Vec<usize> = adj[cur]
                            .iter()
                            .copied()
                            .filter(|&w| mask & (1 << w) != 0 && w != prev)
                            .collect();
                        match nexts.as_slice() {
                            [] => break,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => return usize::MAX, // second branch point
                        }
                    }
                    len
                })
                .collect();
            if lens.contains(&usize::MAX) {
                return None;
            }
            lens.sort_unstable();
            match lens.as_slice() {
                [1, 1, _] => AdeType::new(crate::roots::AdeFamily::D, k as u32).ok(),
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                    AdeType::new(crate::roots::AdeFamily::E, k as u32).ok()
                }
                _ => None,
            }
        }
        _ => None,
    }
}

/// Generic-fiber annotation for a stratum: over a generic point of the
/// stratum, the fiber of the pulled-back family has exactly the stratum's
/// singularity configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberSingularities {
    pub singularities: ProductType,
    pub description: String,
}

pub fn generic_fiber_singularities(sc: &StratumClass) -> FiberSingularities {
    let pt = sc.type_label.clone();
    let description = describe_fiber(&pt);
    FiberSingularities { singularities: pt, description }
}

/// Human-readable singularity configuration, e.g. `A1xA2xA2` becomes
/// "precisely two cusps and one node".
pub fn describe_fiber(pt: &ProductType) -> String {
    let mut counts: BTreeMap<AdeType, usize> = BTreeMap::new();
    for &f in pt.factors() {
        *counts.entry(f).or_default() += 1;
    }
    let mut parts: Vec<String> = Vec::new();
    // largest singularities first
    for (&t, &count) in counts.iter().rev() {
        let noun = match (t.family(), t.index()) {
            (crate::roots::AdeFamily::A, 1) => ("node", "nodes"),
            (crate::roots::AdeFamily::A, 2) => ("cusp", "cusps"),
            (crate::roots::AdeFamily::A, 3) => ("tacnode", "tacnodes"),
            _ => ("singularity", "singularities"),
        };
        let generic_name = noun.0 == "singularity";
        let mut part = format!(
            "{} {}",
            number_word(count),
            if count == 1 { noun.0 } else { noun.1 }
        );
        if generic_name {
            part.push_str(&format!(" of type {t}"));
        }
        parts.push(part);
    }
    let body = match parts.len() {
        1 => parts.pop().unwrap(),
        _ => {
            let last = parts.pop().unwrap();
            format!("{} and {}", parts.join(", "), last)
        }
    };
    format!("precisely {body}")
}

fn number_word(n: usize) -> String {
    match n {
        1 => "one".into(),
        2 => "two".into(),
        3 => "three".into(),
        4 => "four".into(),
        5 => "five".into(),
        6 => "six".into(),
        7 => "seven".into(),
        8 => "eight".into(),
        _ => n.to_string(),
    }
}

/// Serialization record for the census: one entry per merged orbit class.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    pub r#type: String,
    pub codim: usize,
    pub orbit_size: u64,
    pub flat_count: u64,
}

/// Merges orbit classes of equal (codim, type, orbit size) into census
/// records with total flat counts.
pub fn census_records(classes: &[StratumClass]) -> Vec<CensusRecord> {
    let mut merged: BTreeMap<(usize, ProductType, u64), u64> = BTreeMap::new();
    for c in classes {
        *merged.entry((c.codim, c.type_label.clone(), c.orbit_size)).or_default() +=
            c.orbit_size;
    }
    merged
        .into_iter()
        .map(|((codim, t, orbit_size), flat_count)| CensusRecord {
            r#type: t.to_string(),
            codim,
            orbit_size,
            flat_count,
        })
        .collect()
}
