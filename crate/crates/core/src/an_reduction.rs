//! Explicit equations for the semi-stable reduction of an `A_n`
//! singularity in any dimension: the symmetric-function Weyl cover, the
//! mini-versal family, its pull-back, the blow-up chart, the odd- and
//! even-case reduction ideals, and the tail data.
//!
//! Sign convention: the cover sends `t_i ↦ e_i(−a_1, …, −a_{n+1})`, so that
//! `∏(x − a_i) = x^{n+1} + t_1 x^n + … + t_{n+1}` holds identically (not
//! just up to sign). Variable names are `a_i`, `b_i`, `c_i`, `t_i`, `x_i`.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};
use serde::Serialize;

use crate::poly::{elementary_symmetric, MPoly};
use crate::roots::AdeType;
use crate::{Error, Result};

fn names(prefix: &str, from: usize, to: usize) -> Vec<String> {
    (from..=to).map(|i| format!("{prefix}{i}")).collect()
}

/// A family of hypersurfaces presented by base/fiber variables and
/// relations; `base_relations ⊆ total_relations` (the family restricts
/// over its base).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPresentation {
    pub base_vars: Vec<String>,
    pub fiber_vars: Vec<String>,
    pub base_relations: Vec<MPoly>,
    pub total_relations: Vec<MPoly>,
    pub chart_label: String,
}

/// How the tail attaches to the normalization of the degenerate fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Attachment {
    OneWeierstrassPoint,
    TwoConjugatePoints,
}

/// The tail of the stable limit of a smoothing of an `A_n` singularity: a
/// hyperelliptic curve of genus ⌊n/2⌋ in a weighted projective space,
/// attached in one point (n even) or two conjugate points (n odd).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailDescription {
    pub singularity: AdeType,
    pub tail_genus: u32,
    pub attachment: Attachment,
    pub ambient_weights: Vec<u32>,
    /// Order of the generic automorphism group of the stable model: 2 for
    /// `A_{2k}` (the hyperelliptic involution of the tail survives), 1 for
    /// `A_{2k+1}` generically.
    pub generic_aut_order: u8,
    /// For `A_{2k+1}`: the automorphism order jumps back to 2 when the
    /// ambient curve genus equals this value (g = k + 1).
    pub aut_exception_genus: Option<i64>,
}

/// Tail data for `A_n` in dimension `m` (curves are `m = 2`): genus
/// ⌊n/2⌋; ambient ℙ(1,1,(n+1)/2,…) for n odd, ℙ(1,2,n+1,…) for n even,
/// with `m−1` copies of the last weight.
pub fn tail_data(n: u32, m: u32) -> TailDescription {
    assert!(n >= 1 && m >= 2);
    let sing = AdeType::a(n);
    if n % 2 == 1 {
        let k = (n + 1) / 2;
        let mut weights = vec![1, 1];
        weights.extend(std::iter::repeat(k).take((m - 1) as usize));
        TailDescription {
            singularity: sing,
            tail_genus: n / 2,
            attachment: Attachment::TwoConjugatePoints,
            ambient_weights: weights,
            generic_aut_order: 1,
            aut_exception_genus: Some(((n + 1) / 2) as i64),
        }
    } else {
        let mut weights = vec![1, 2];
        weights.extend(std::iter::repeat(n + 1).take((m - 1) as usize));
        TailDescription {
            singularity: sing,
            tail_genus: n / 2,
            attachment: Attachment::OneWeierstrassPoint,
            ambient_weights: weights,
            generic_aut_order: 2,
            aut_exception_genus: None,
        }
    }
}

/// The Weyl cover of the `A_n` deformation space: the images of
/// `t_1, …, t_{n+1}`, namely `e_i(−a_1, …, −a_{n+1})`, so that
/// `∏(x − a_i) = x^{n+1} + t_1 x^n + … + t_{n+1}` exactly.
pub fn weyl_cover_map(n: u32) -> Vec<MPoly> {
    assert!(n >= 1);
    let vars = names("a", 1, n as usize + 1);
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    (1..=n as usize + 1)
        .map(|i| {
            let e = elementary_symmetric(i, &refs);
            if i % 2 == 1 {
                e.neg()
            } else {
                e
            }
        })
        .collect()
}

fn quadric_tail(m: u32) -> MPoly {
    let mut q = MPoly::zero();
    for j in 2..=m as usize {
        q = q.add(&MPoly::var(&format!("x{j}")).pow(2));
    }
    q
}

/// Mini-versal deformation of the `A_n` singularity in dimension `m`:
/// `(x_2² + … + x_m²) + x_1^{n+1} + t_2 x_1^{n−1} + … + t_{n+1}` over the
/// base with coordinates `t_2, …, t_{n+1}`.
pub fn miniversal_family(n: u32, m: u32) -> FamilyPresentation {
    assert!(n >= 1 && m >= 1);
    let x1 = MPoly::var("x1");
    let mut rel = quadric_tail(m).add(&x1.pow(n + 1));
    for i in 2..=n as usize + 1 {
        let t = MPoly::var(&format!("t{i}"));
        rel = rel.add(&t.mul(&x1.pow((n as usize + 1 - i) as u32)));
    }
    FamilyPresentation {
        base_vars: names("t", 2, n as usize + 1),
        fiber_vars: names("x", 1, m as usize),
        base_relations: vec![],
        total_relations: vec![rel],
        chart_label: "miniversal".into(),
    }
}

/// The pull-back of the mini-versal family along the Weyl cover:
/// `(x_2² + … + x_m²) + ∏(x_1 − a_i)` over `σ_1(a) = 0`.
pub fn weyl_pullback_family(n: u32, m: u32) -> FamilyPresentation {
    assert!(n >= 1 && m >= 1);
    let k = n as usize + 1;
    let refs = names("a", 1, k);
    let sigma1 = refs.iter().fold(MPoly::zero(), |acc, v| acc.add(&MPoly::var(v)));
    let x1 = MPoly::var("x1");
    let mut prod = MPoly::one();
    for v in &refs {
        prod = prod.mul(&x1.sub(&MPoly::var(v)));
    }
    let rel = quadric_tail(m).add(&prod);
    FamilyPresentation {
        base_vars: refs,
        fiber_vars: names("x", 1, m as usize),
        base_relations: vec![sigma1.clone()],
        total_relations: vec![sigma1, rel],
        chart_label: "weyl-pullback".into(),
    }
}

/// The standard chart of the blow-up at the origin of the Weyl cover:
/// coordinates `b_1, …, b_{n+1}` with `a_1 = b_1`, `a_i = b_1 b_i`; the
/// family becomes `(x_2² + … + x_m²) + (x_1 − b_1)∏(x_1 − b_1 b_i)` over
/// `σ_1(1, b_2, …, b_{n+1}) = 0`. The exceptional divisor is `b_1 = 0`.
pub fn blowup_chart_family(n: u32, m: u32) -> FamilyPresentation {
    assert!(n >= 1 && m >= 1);
    let k = n as usize + 1;
    let b1 = MPoly::var("b1");
    let mut base = MPoly::one();
    for i in 2..=k {
        base = base.add(&MPoly::var(&format!("b{i}")));
    }
    let x1 = MPoly::var("x1");
    let mut prod = x1.sub(&b1);
    for i in 2..=k {
        prod = prod.mul(&x1.sub(&b1.mul(&MPoly::var(&format!("b{i}")))));
    }
    let rel = quadric_tail(m).add(&prod);
    FamilyPresentation {
        base_vars: names("b", 1, k),
        fiber_vars: names("x", 1, m as usize),
        base_relations: vec![base.clone()],
        total_relations: vec![base, rel],
        chart_label: "blowup-chart".into(),
    }
}

/// Odd case: the ideal `I = ((b_1, x_1)^{(n+1)/2}, x_2, …, x_m)` whose
/// blow-up extends the family over the exceptional divisor, plus the tail.
pub fn odd_case_reduction(n: u32, m: u32) -> Result<(Vec<MPoly>, TailDescription)> {
    if n % 2 == 0 {
        return Err(Error::WrongParity { expected: "odd", got: n });
    }
    assert!(m >= 2);
    let k = (n + 1) / 2;
    let b1 = MPoly::var("b1");
    let x1 = MPoly::var("x1");
    let mut gens: Vec<MPoly> = (0..=k).map(|i| b1.pow(i).mul(&x1.pow(k - i))).collect();
    for j in 2..=m as usize {
        gens.push(MPoly::var(&format!("x{j}")));
    }
    Ok((gens, tail_data(n, m)))
}

/// Even case data: the branched double cover of the chart base, the family
/// it carries, the reduction ideal, and the tail.
#[derive(Debug, Clone)]
pub struct EvenReduction {
    /// The base change `b_1 ↦ c_1²` (other coordinates are renamed `c_i`).
    pub cover: (String, MPoly),
    pub family: FamilyPresentation,
    pub ideal: Vec<MPoly>,
    pub tail: TailDescription,
}

/// Even case: after the double cover `b_1 ↦ c_1²`, the family
/// `(x_2² + … + x_m²) + (x_1 − c_1²)∏(x_1 − c_1² c_i)` over
/// `σ_1(1, c_2, …, c_{n+1}) = 0`, and the reduction ideal
/// `I = ((c_1², x_1)^{n+1}, (c_1^{n+1}, c_1^{n−1} x_1, …, c_1 x_1^{n/2})·(x_2, …, x_m), {x_i x_j})`.
pub fn even_case_reduction(n: u32, m: u32) -> Result<EvenReduction> {
    if n % 2 == 1 {
        return Err(Error::WrongParity { expected: "even", got: n });
    }
    assert!(n >= 2 && m >= 2);
    let k = n as usize + 1;
    let c1 = MPoly::var("c1");
    let x1 = MPoly::var("x1");
    let c1sq = c1.pow(2);

    let mut base = MPoly::one();
    for i in 2..=k {
        base = base.add(&MPoly::var(&format!("c{i}")));
    }
    let mut prod = x1.sub(&c1sq);
    for i in 2..=k {
        prod = prod.mul(&x1.sub(&c1sq.mul(&MPoly::var(&format!("c{i}")))));
    }
    let rel = quadric_tail(m).add(&prod);
    let family = FamilyPresentation {
        base_vars: names("c", 1, k),
        fiber_vars: names("x", 1, m as usize),
        base_relations: vec![base.clone()],
        total_relations: vec![base, rel],
        chart_label: "even-double-cover".into(),
    };

    let mut ideal: Vec<MPoly> = Vec::new();
    // (c_1², x_1)^{n+1}
    for i in 0..=n + 1 {
        ideal.push(c1sq.pow(i).mul(&x1.pow(n + 1 - i)));
    }
    // (c_1^{n+1}, c_1^{n−1} x_1, …, c_1 x_1^{n/2}) · (x_2, …, x_m)
    for j in 2..=m {
        let xj = MPoly::var(&format!("x{j}"));
        for s in 0..=n / 2 {
            ideal.push(c1.pow(n + 1 - 2 * s).mul(&x1.pow(s)).mul(&xj));
        }
    }
    // {x_i x_j}, 2 ≤ i ≤ j ≤ m
    for i in 2..=m {
        for j in i..=m {
            ideal.push(MPoly::var(&format!("x{i}")).mul(&MPoly::var(&format!("x{j}"))));
        }
    }

    Ok(EvenReduction { cover: ("b1".into(), c1sq), family, ideal, tail: tail_data(n, m) })
}

/// Both sides of the worked `A_2` family: the expanded chart restriction
/// and the displayed closed form, which agree after `x_1 ↦ −x_1` (with the
/// cubic part negated).
#[derive(Debug, Clone)]
pub struct A2Reconciliation {
    /// Restriction of the blow-up chart of `A_2` to the line with slope
    /// `b_2` (i.e. `b_3 = −1 − b_2` substituted), expanded.
    pub chart_restriction: MPoly,
    /// The displayed form
    /// `x_2² + x_1³ − (b_2² + b_2 + 1) b_1² x_1 − b_2(1 + b_2) b_1³`.
    pub paper_equation: MPoly,
    pub matches_after_reflection: bool,
}

/// The displayed `A_2` one-parameter family, in the given slope variable.
pub fn a2_paper_family(slope_var: &str) -> MPoly {
    let b1 = MPoly::var("b1");
    let b2 = MPoly::var(slope_var);
    let x1 = MPoly::var("x1");
    let x2 = MPoly::var("x2");
    let p = b2.pow(2).add(&b2).add(&MPoly::one()); // b2² + b2 + 1
    let q = b2.mul(&MPoly::one().add(&b2)); // b2(1 + b2)
    x2.pow(2)
        .add(&x1.pow(3))
        .sub(&p.mul(&b1.pow(2)).mul(&x1))
        .sub(&q.mul(&b1.pow(3)))
}

/// Expanded restriction of `blowup_chart_family(2, 2)` to the line with
/// slope `b_2`, together with the displayed equation and their
/// reconciliation. Neither polynomial is altered: the function only checks
/// that the cubic parts agree after negating `x_1`.
pub fn a2_reconciliation(slope_var: &str) -> A2Reconciliation {
    let chart = blowup_chart_family(2, 2);
    // base relation 1 + b2 + b3 = 0 eliminates b3
    let minus_one_minus_b2 = MPoly::one().add(&MPoly::var("b2")).neg();
    let mut bindings = BTreeMap::from([("b3".to_string(), minus_one_minus_b2)]);
    if slope_var != "b2" {
        bindings.insert("b2".to_string(), MPoly::var(slope_var));
    }
    let restriction = chart.total_relations[1].substitute(&bindings);
    let paper = a2_paper_family(slope_var);

    let x2sq = MPoly::var("x2").pow(2);
    let chart_cubic = restriction.sub(&x2sq);
    let paper_cubic = paper.sub(&x2sq);
    let reflected = chart_cubic.substitute_one("x1", &MPoly::var("x1").neg()).neg();
    let matches_after_reflection = reflected == paper_cubic;

    A2Reconciliation { chart_restriction: restriction, paper_equation: paper, matches_after_reflection }
}

/// The expanded chart restriction of the worked `A_2` family. Panics if
/// the reconciliation with the displayed equation fails.
pub fn a2_worked_family(slope_var: &str) -> MPoly {
    let rec = a2_reconciliation(slope_var);
    assert!(rec.matches_after_reflection, "A2 chart and displayed family must agree after x1 ↦ −x1");
    rec.chart_restriction
}

/// The four special points on the exceptional line of the `A_2` resolution
/// (cross-ratio data), with degeneracy flags.
#[derive(Debug, Clone, Serialize)]
pub struct A2SpecialPoints {
    /// `∞, 1, b_2, −(1 + b_2)` (evaluated when a value is supplied).
    pub labels: [String; 4],
    /// Index pairs of coinciding points.
    pub coincidences: Vec<(usize, usize)>,
    /// True when `b_2` hits one of the flagged values {1, −2, 0, −1} or a
    /// coincidence occurs.
    pub degenerate: bool,
}

pub fn special_points_a2(b2: Option<&BigRational>) -> A2SpecialPoints {
    match b2 {
        None => A2SpecialPoints {
            labels: ["inf".into(), "1".into(), "b2".into(), "-(1+b2)".into()],
            coincidences: vec![],
            degenerate: false,
        },
        Some(v) => {
            let one = BigRational::one();
            let p3 = -(&one + v);
            let labels = ["inf".to_string(), "1".to_string(), v.to_string(), p3.to_string()];
            let mut coincidences = Vec::new();
            if *v == one {
                coincidences.push((1, 2));
            }
            if p3 == one {
                coincidences.push((1, 3));
            }
            if p3 == *v {
                coincidences.push((2, 3));
            }
            let special = [
                BigRational::one(),
                -BigRational::from_integer(2.into()),
                BigRational::zero(),
                -BigRational::one(),
            ];
            let degenerate = special.contains(v) || !coincidences.is_empty();
            A2SpecialPoints { labels, coincidences, degenerate }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    fn avar_bindings_pullback(n: u32) -> BTreeMap<String, MPoly> {
        // t_i ↦ cover image, composed with a_{n+1} ↦ −(a_1 + … + a_n)
        let k = n as usize + 1;
        let elim = {
            let mut s = MPoly::zero();
            for i in 1..k {
                s = s.add(&MPoly::var(&format!("a{i}")));
            }
            s.neg()
        };
        weyl_cover_map(n)
            .into_iter()
            .enumerate()
            .map(|(i, img)| {
                (format!("t{}", i + 1), img.substitute_one(&format!("a{k}"), &elim))
            })
            .collect()
    }

    #[test]
    fn cover_map_n1() {
        let cover = weyl_cover_map(1);
        // sign convention: t_1 = −(a1 + a2), t_2 = a1 a2
        assert_eq!(cover[0], p("-a1 - a2"));
        assert_eq!(cover[1], p("a1*a2"));
        let cover2 = weyl_cover_map(2);
        assert_eq!(cover2[0], p("-a1 - a2 - a3"));
        assert_eq!(cover2[1], p("a1*a2 + a1*a3 + a2*a3"));
        assert_eq!(cover2[2], p("-a1*a2*a3"));
    }

    #[test]
    fn cover_map_product_identity() {
        // ∏(x − a_i) = x^{n+1} + t_1 x^n + … + t_{n+1} exactly, n ≤ 4
        for n in 1..=4u32 {
            let k = n as usize + 1;
            let cover = weyl_cover_map(n);
            let x = MPoly::var("x");
            let mut lhs = MPoly::one();
            for i in 1..=k {
                lhs = lhs.mul(&x.sub(&MPoly::var(&format!("a{i}"))));
            }
            let mut rhs = x.pow(n + 1);
            for (i, t) in cover.iter().enumerate() {
                rhs = rhs.add(&t.mul(&x.pow((k - 1 - i) as u32)));
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn miniversal_small_cases() {
        let f = miniversal_family(1, 2);
        assert_eq!(f.total_relations, vec![p("x2^2 + x1^2 + t2")]);
        assert!(f.base_relations.is_empty());
        let f = miniversal_family(2, 2);
        assert_eq!(f.total_relations, vec![p("x2^2 + x1^3 + t2*x1 + t3")]);
        assert_eq!(f.base_vars, vec!["t2", "t3"]);
    }

    #[test]
    fn miniversal_discriminant_nonzero() {
        use crate::poly::discriminant;
        for n in 1..=4u32 {
            let f = miniversal_family(n, 2);
            let poly = f.total_relations[0].sub(&MPoly::var("x2").pow(2));
            let d = discriminant(&poly, "x1").unwrap();
            assert!(!d.is_zero());
            assert_eq!(d.degree_in("x1"), 0);
        }
    }

    #[test]
    fn pullback_family_n1() {
        let f = weyl_pullback_family(1, 2);
        assert_eq!(f.base_relations, vec![p("a1 + a2")]);
        assert_eq!(f.total_relations[1], p("x2^2").add(&p("x1 - a1").mul(&p("x1 - a2"))));
        // with a2 = −a1: x2² + (x1 − a1)(x1 + a1)
        let restricted = f.total_relations[1].substitute_one("a2", &p("-a1"));
        assert_eq!(restricted, p("x2^2 + x1^2 - a1^2"));
    }

    #[test]
    fn pullback_matches_miniversal_composed_with_cover() {
        // modulo σ1 = 0 (a_{n+1} eliminated), the mini-versal family pulled
        // back along the cover equals the displayed pull-back family
        for n in 1..=3u32 {
            let k = n as usize + 1;
            let mini = miniversal_family(n, 2);
            let composed = mini.total_relations[0].substitute(&avar_bindings_pullback(n));
            let pull = weyl_pullback_family(n, 2);
            let elim = {
                let mut s = MPoly::zero();
                for i in 1..k {
                    s = s.add(&MPoly::var(&format!("a{i}")));
                }
                s.neg()
            };
            let direct = pull.total_relations[1].substitute_one(&format!("a{k}"), &elim);
            assert_eq!(composed, direct, "n = {n}");
        }
    }

    #[test]
    fn pullback_discriminant_hyperplanes_n3() {
        use crate::poly::{discriminant, divides};
        // the pulled-back discriminant is divisible by every a_i − a_j
        let n = 3u32;
        let mini = miniversal_family(n, 2);
        let fpoly = mini.total_relations[0].sub(&MPoly::var("x2").pow(2));
        let disc = discriminant(&fpoly, "x1").unwrap();
        let pulled = disc.substitute(&avar_bindings_pullback(n));
        let elim = p("-a1 - a2 - a3");
        for i in 1..=4usize {
            for j in i + 1..=4 {
                let diff = MPoly::var(&format!("a{i}"))
                    .sub(&MPoly::var(&format!("a{j}")))
                    .substitute_one("a4", &elim);
                assert!(divides(&diff, &pulled), "a{i} - a{j} must divide the pullback");
            }
        }
    }

    #[test]
    fn chart_substitution_consistency() {
        // substituting a1 = b1, a_i = b1 b_i into the pull-back family
        // yields the chart family exactly, n ≤ 4
        for n in 1..=4u32 {
            let k = n as usize + 1;
            let pull = weyl_pullback_family(n, 2);
            let b1 = MPoly::var("b1");
            let mut bindings = BTreeMap::from([("a1".to_string(), b1.clone())]);
            for i in 2..=k {
                bindings.insert(format!("a{i}"), b1.mul(&MPoly::var(&format!("b{i}"))));
            }
            let chart = blowup_chart_family(n, 2);
            let total = pull.total_relations[1].substitute(&bindings);
            assert_eq!(total, chart.total_relations[1], "n = {n} total relation");
            // base: σ1(a) ↦ b1·σ1(1, b2, …)
            let base = pull.base_relations[0].substitute(&bindings);
            assert_eq!(base, b1.mul(&chart.base_relations[0]), "n = {n} base relation");
        }
    }

    #[test]
    fn chart_fiber_at_exceptional_divisor() {
        // b1 = 0 leaves the A_n normal form x2² + … + x_m² + x1^{n+1}
        for n in 1..=7u32 {
            for m in [2u32, 3] {
                let chart = blowup_chart_family(n, m);
                let fiber = chart.total_relations[1].substitute_one("b1", &MPoly::zero());
                let expect = quadric_tail(m).add(&MPoly::var("x1").pow(n + 1));
                assert_eq!(fiber, expect, "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn chart_n1_forced_form() {
        // n = 1: base relation 1 + b2 = 0 forces x2² + (x1 − b1)(x1 + b1)
        let chart = blowup_chart_family(1, 2);
        assert_eq!(chart.base_relations[0], p("1 + b2"));
        let rel = chart.total_relations[1].substitute_one("b2", &p("-1"));
        assert_eq!(rel, p("x2^2 + x1^2 - b1^2"));
    }

    #[test]
    fn odd_case_ideals() {
        let (gens, tail) = odd_case_reduction(1, 2).unwrap();
        assert_eq!(gens, vec![p("x1"), p("b1"), p("x2")]);
        assert_eq!(tail.tail_genus, 0);
        let (gens, tail) = odd_case_reduction(3, 2).unwrap();
        assert_eq!(gens, vec![p("x1^2"), p("b1*x1"), p("b1^2"), p("x2")]);
        assert_eq!(tail.tail_genus, 1);
        assert_eq!(tail.ambient_weights, vec![1, 1, 2]);
        let (_, tail) = odd_case_reduction(5, 2).unwrap();
        assert_eq!(tail.tail_genus, 2);
        assert_eq!(tail.ambient_weights, vec![1, 1, 3]);
        assert!(odd_case_reduction(2, 2).is_err());
    }

    #[test]
    fn even_case_family_and_tail() {
        let red = even_case_reduction(2, 2).unwrap();
        assert_eq!(red.cover.0, "b1");
        assert_eq!(red.cover.1, p("c1^2"));
        assert_eq!(red.family.base_relations[0], p("1 + c2 + c3"));
        let expect = p("x2^2").add(
            &p("x1 - c1^2")
                .mul(&p("x1").sub(&p("c1^2*c2")))
                .mul(&p("x1").sub(&p("c1^2*c3"))),
        );
        assert_eq!(red.family.total_relations[1], expect);
        assert_eq!(red.tail.tail_genus, 1);
        assert_eq!(red.tail.ambient_weights, vec![1, 2, 3]);
        let red4 = even_case_reduction(4, 2).unwrap();
        assert_eq!(red4.tail.tail_genus, 2);
        assert_eq!(red4.tail.ambient_weights, vec![1, 2, 5]);
        assert!(even_case_reduction(3, 2).is_err());
    }

    #[test]
    fn even_case_matches_chart_under_cover() {
        // substituting b1 ↦ c1², b_i ↦ c_i into the chart family gives the
        // double-cover family
        for n in [2u32, 4] {
            let chart = blowup_chart_family(n, 2);
            let red = even_case_reduction(n, 2).unwrap();
            let mut bindings = BTreeMap::from([("b1".to_string(), p("c1^2"))]);
            for i in 2..=n as usize + 1 {
                bindings.insert(format!("b{i}"), MPoly::var(&format!("c{i}")));
            }
            assert_eq!(
                chart.total_relations[1].substitute(&bindings),
                red.family.total_relations[1]
            );
            assert_eq!(
                chart.base_relations[0].substitute(&bindings),
                red.family.base_relations[0]
            );
        }
    }

    #[test]
    fn even_ideal_at_n2_m2() {
        let red = even_case_reduction(2, 2).unwrap();
        let expect = vec![
            p("x1^3"),
            p("c1^2*x1^2"),
            p("c1^4*x1"),
            p("c1^6"),
            p("c1^3*x2"),
            p("c1*x1*x2"),
            p("x2^2"),
        ];
        assert_eq!(red.ideal, expect);
    }

    #[test]
    fn tail_table_example_41() {
        for n in 1..=10u32 {
            let t = tail_data(n, 2);
            assert_eq!(t.tail_genus, n / 2, "genus rule at n = {n}");
            if n % 2 == 0 {
                assert_eq!(t.attachment, Attachment::OneWeierstrassPoint);
                assert_eq!(t.generic_aut_order, 2);
                assert_eq!(t.ambient_weights, vec![1, 2, n + 1]);
                assert!(t.aut_exception_genus.is_none());
            } else {
                assert_eq!(t.attachment, Attachment::TwoConjugatePoints);
                assert_eq!(t.generic_aut_order, 1);
                assert_eq!(t.ambient_weights, vec![1, 1, (n + 1) / 2]);
                assert_eq!(t.aut_exception_genus, Some(((n + 1) / 2) as i64));
            }
        }
    }

    #[test]
    fn a2_family_reconciliation() {
        let rec = a2_reconciliation("b2");
        assert!(rec.matches_after_reflection);
        // coefficient of x1 is −(b2² + b2 + 1) b1² in both forms
        let coeff = rec.paper_equation.coeff_of("x1", 1);
        assert_eq!(coeff, p("-b1^2*b2^2 - b1^2*b2 - b1^2"));
        assert_eq!(rec.chart_restriction.coeff_of("x1", 1), coeff);
        // constant terms differ exactly by sign
        assert_eq!(
            rec.paper_equation.coeff_of("x1", 0).coeff_of("x2", 0),
            rec.chart_restriction.coeff_of("x1", 0).coeff_of("x2", 0).neg()
        );
    }

    #[test]
    fn a2_slope_one_roots() {
        // b2 = 1: roots in ratio 1 : 1 : −2
        let fam = a2_worked_family("b2").substitute_one("b2", &MPoly::one());
        let cubic = fam.sub(&p("x2^2"));
        let b1 = MPoly::var("b1");
        let x1 = MPoly::var("x1");
        let expect = x1.sub(&b1).pow(2).mul(&x1.add(&b1.scale(2)));
        assert_eq!(cubic, expect);
        // σ1 of the three roots is zero by the base relation
        assert_eq!(cubic.coeff_of("x1", 2), MPoly::zero());
    }

    #[test]
    fn a2_special_points() {
        let generic = special_points_a2(None);
        assert_eq!(generic.labels, ["inf", "1", "b2", "-(1+b2)"]);
        assert!(!generic.degenerate);

        let one = BigRational::one();
        let at_one = special_points_a2(Some(&one));
        assert!(at_one.degenerate);
        assert_eq!(at_one.coincidences, vec![(1, 2)]);

        let zero = BigRational::zero();
        let at_zero = special_points_a2(Some(&zero));
        assert!(at_zero.degenerate);
        assert!(at_zero.coincidences.is_empty());

        let minus_half = BigRational::new((-1).into(), 2.into());
        let at_mh = special_points_a2(Some(&minus_half));
        assert_eq!(at_mh.coincidences, vec![(2, 3)]);
        assert!(at_mh.degenerate);

        let generic_val = BigRational::from_integer(5.into());
        assert!(!special_points_a2(Some(&generic_val)).degenerate);
    }
}
