//! Curve-level assembly: deformation structure, boundary-divisor reports
//! with monodromy and stack loci, local cover equations, and tails.
//!
//! Given a genus and a singularity configuration, the mini-versal
//! deformation base is (étale locally) a product of the per-singularity
//! bases times an affine factor, the discriminant is the sum of pullbacks,
//! and the wonderful blow-up of the Weyl cover carries boundary divisors
//! indexed by irreducible parabolic types. Extending the stable-model
//! family over a divisor needs stack structure exactly along the
//! `A_{2n}` divisors (for one-dimensional fibers).

use num::BigUint;
use serde::Serialize;

use crate::an_reduction::{tail_data, TailDescription};
use crate::monodromy::{classification_row, needs_stack, MonodromyRow};
use crate::poly::MPoly;
use crate::roots::{weyl_group_order, AdeFamily, AdeType, ProductType, RootSystem};
use crate::wonderful::divisor_census;
use crate::{Error, Result};

/// A curve with ADE singularities, specified by arithmetic genus and
/// singularity configuration. `dim` is the fiber dimension (1 for curves;
/// 2 exposes the surface contrast where no stack structure is ever
/// needed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    pub genus: i64,
    pub singularities: ProductType,
    pub dim: u32,
}

impl CurveSpec {
    pub fn new(genus: i64, singularities: ProductType) -> CurveSpec {
        CurveSpec { genus, singularities, dim: 1 }
    }

    pub fn with_dim(mut self, dim: u32) -> CurveSpec {
        self.dim = dim;
        self
    }

    fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.genus < 2 {
            w.push(format!(
                "genus {} < 2: moduli-facing statements assume p_a >= 2; combinatorial data only",
                self.genus
            ));
        }
        w
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformationFactor {
    pub singularity: AdeType,
    /// Dimension of the local deformation base = Milnor number = rank.
    pub dim: usize,
}

/// Local product structure of the deformation space: one factor per
/// singularity plus an affine factor of undetermined dimension.
#[derive(Debug, Clone, Serialize)]
pub struct DeformationStructure {
    pub genus: i64,
    pub factors: Vec<DeformationFactor>,
    pub total_singularity_dim: usize,
    pub weyl_group_order: String,
    /// The discriminant as a sum of pullbacks from the factors.
    pub discriminant: String,
    /// The extra smooth factor; its dimension is not determined by the
    /// local structure, so it stays symbolic.
    pub ambient_factor: String,
    pub warnings: Vec<String>,
}

pub fn deformation_structure(cs: &CurveSpec) -> DeformationStructure {
    let factors: Vec<DeformationFactor> = cs
        .singularities
        .factors()
        .iter()
        .map(|&t| DeformationFactor { singularity: t, dim: t.rank() })
        .collect();
    let discriminant = factors
        .iter()
        .enumerate()
        .map(|(i, f)| format!("pi_{}^* Delta_{}", i + 1, f.singularity))
        .collect::<Vec<_>>()
        .join(" + ");
    DeformationStructure {
        genus: cs.genus,
        total_singularity_dim: factors.iter().map(|f| f.dim).sum(),
        weyl_group_order: weyl_group_order(&cs.singularities).to_string(),
        discriminant,
        ambient_factor: "A^m (m not determined by the local data)".into(),
        factors,
        warnings: cs.warnings(),
    }
}

/// Tail data for one boundary-divisor type, resolved against the curve
/// genus where the description is available.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind")]
pub enum TailInfo {
    /// A-type divisors: hyperelliptic tail with resolved automorphism
    /// order.
    Hyperelliptic {
        description: TailDescription,
        /// 2 for `A_{2k}`; for `A_{2k+1}` generically 1, but 2 when the
        /// curve genus equals k + 1.
        aut_order: u8,
        /// The automorphism statement assumes the normalization and its
        /// marked points have general moduli.
        genericity_caveat: String,
    },
    /// D- and E-type tails are not reconstructed here.
    SeeHassett { singularity: AdeType },
}

/// Tail description for an A-type divisor at the given curve genus.
pub fn tail_description(t: AdeType, g: i64) -> Result<TailInfo> {
    if t.family() != AdeFamily::A {
        return Ok(TailInfo::SeeHassett { singularity: t });
    }
    if g < 2 {
        return Err(Error::InvalidCurveSpec(format!(
            "tail description needs genus >= 2, got {g}"
        )));
    }
    let desc = tail_data(t.index(), 2);
    let aut_order = match desc.aut_exception_genus {
        None => desc.generic_aut_order,
        Some(exc) if g == exc => 2,
        Some(_) => desc.generic_aut_order,
    };
    Ok(TailInfo::Hyperelliptic {
        description: desc,
        aut_order,
        genericity_caveat:
            "assumes the normalization and its marked point(s) have general moduli".into(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DivisorTypeCount {
    pub divisor_type: AdeType,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TailEntry {
    pub divisor_type: AdeType,
    pub tail: TailInfo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverVariant {
    Double,
    Coordinatewise,
}

/// Local cover equations where `ℓ` stack divisors meet with local equation
/// `x_1 ⋯ x_ℓ`.
#[derive(Debug, Clone, Serialize)]
pub struct LocalCover {
    pub depth: usize,
    pub variant: String,
    pub equations: Vec<String>,
    pub base_note: String,
}

/// The two natural branched covers killing the ℤ/2 monodromy along stack
/// divisors: the double cover `t² = x_1 ⋯ x_ℓ` (one equation, introduces a
/// toric singularity in the base) or the ℤ₂^ℓ cover `t_i² = x_i` (the base
/// remains smooth).
pub fn local_cover_equations(depth: usize, variant: CoverVariant) -> Vec<MPoly> {
    assert!(depth >= 1);
    match variant {
        CoverVariant::Double => {
            let t = if depth == 1 { MPoly::var("t1") } else { MPoly::var("t") };
            let mut prod = MPoly::one();
            for i in 1..=depth {
                prod = prod.mul(&MPoly::var(&format!("x{i}")));
            }
            vec![t.pow(2).sub(&prod)]
        }
        CoverVariant::Coordinatewise => (1..=depth)
            .map(|i| {
                MPoly::var(&format!("t{i}"))
                    .pow(2)
                    .sub(&MPoly::var(&format!("x{i}")))
            })
            .collect(),
    }
}

pub fn local_cover(depth: usize, variant: CoverVariant) -> LocalCover {
    let (name, note) = match variant {
        CoverVariant::Double => ("double", "introduces a toric singularity in the base"),
        CoverVariant::Coordinatewise => ("coordinatewise", "the base remains smooth"),
    };
    LocalCover {
        depth,
        variant: name.into(),
        equations: local_cover_equations(depth, variant)
            .iter()
            .map(MPoly::to_string)
            .collect(),
        base_note: note.into(),
    }
}

/// The full census for a curve spec: divisor counts, per-type monodromy,
/// stack loci, tails, and local cover equations.
#[derive(Debug, Clone, Serialize)]
pub struct DivisorReport {
    pub genus: i64,
    pub singularities: ProductType,
    pub dim: u32,
    pub divisor_counts: Vec<DivisorTypeCount>,
    pub monodromy: Vec<MonodromyRow>,
    /// Divisor types along which the moduli map to the stack needs ℤ/2
    /// structure: exactly the `A_{2n}` types (odd fiber dimension).
    pub stack_loci: Vec<AdeType>,
    pub tails: Vec<TailEntry>,
    /// Coordinatewise square-root cover at the deepest stack locus
    /// intersection; absent when no stack structure is needed.
    pub local_cover: Option<LocalCover>,
    pub warnings: Vec<String>,
}

pub fn divisor_report(cs: &CurveSpec) -> Result<DivisorReport> {
    if cs.dim < 1 {
        return Err(Error::InvalidCurveSpec("fiber dimension must be >= 1".into()));
    }
    let rs = RootSystem::product(cs.singularities.factors())?;
    let census = divisor_census(&rs);
    let divisor_counts: Vec<DivisorTypeCount> = census
        .iter()
        .map(|&(t, count)| DivisorTypeCount { divisor_type: t, count })
        .collect();
    let monodromy: Vec<MonodromyRow> =
        census.iter().map(|&(t, _)| classification_row(t, cs.dim)).collect();
    let stack_loci: Vec<AdeType> = census
        .iter()
        .map(|&(t, _)| t)
        .filter(|&t| needs_stack(t, cs.dim))
        .collect();
    let tails: Vec<TailEntry> = census
        .iter()
        .map(|&(t, _)| {
            Ok(TailEntry {
                divisor_type: t,
                tail: if cs.genus >= 2 {
                    tail_description(t, cs.genus)?
                } else {
                    TailInfo::SeeHassett { singularity: t }
                },
            })
        })
        .collect::<Result<_>>()?;
    // Depth of the emitted cover: number of stack divisor classes, capped
    // by the rank bound on mutually intersecting divisors.
    let local_cover = if stack_loci.is_empty() {
        None
    } else {
        let depth = stack_loci.len().min(rs.rank());
        Some(local_cover(depth, CoverVariant::Coordinatewise))
    };
    let mut warnings = cs.warnings();
    if cs.genus < 2 {
        warnings.push("tail descriptions suppressed at genus < 2".into());
    }
    Ok(DivisorReport {
        genus: cs.genus,
        singularities: cs.singularities.clone(),
        dim: cs.dim,
        divisor_counts,
        monodromy,
        stack_loci,
        tails,
        local_cover,
        warnings,
    })
}

/// Product of the per-factor Weyl group orders (= |W_X|).
pub fn weyl_order_of_spec(cs: &CurveSpec) -> BigUint {
    weyl_group_order(&cs.singularities)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(g: i64, s: &str) -> CurveSpec {
        CurveSpec::new(g, s.parse().unwrap())
    }

    #[test]
    fn deformation_structure_examples() {
        let node = deformation_structure(&spec(3, "A1"));
        assert_eq!(node.factors.len(), 1);
        assert_eq!(node.factors[0].dim, 1);
        assert_eq!(node.weyl_group_order, "2");

        let cusp_node = deformation_structure(&spec(3, "A2,A1"));
        let dims: Vec<usize> = cusp_node.factors.iter().map(|f| f.dim).collect();
        assert_eq!(dims, vec![1, 2]); // canonical order A1 < A2
        assert_eq!(cusp_node.weyl_group_order, "12");
        assert_eq!(cusp_node.total_singularity_dim, 3);
        assert_eq!(cusp_node.discriminant, "pi_1^* Delta_A1 + pi_2^* Delta_A2");

        let e6 = deformation_structure(&spec(5, "E6"));
        assert_eq!(e6.factors[0].dim, 6);
        assert_eq!(e6.weyl_group_order, "51840");
    }

    #[test]
    fn divisor_report_cusp_curve() {
        let report = divisor_report(&spec(3, "A2")).unwrap();
        let counts: Vec<(String, u64)> = report
            .divisor_counts
            .iter()
            .map(|d| (d.divisor_type.to_string(), d.count))
            .collect();
        assert_eq!(counts, vec![("A1".into(), 3), ("A2".into(), 1)]);
        assert_eq!(report.stack_loci, vec![AdeType::a(2)]);
        let a2_row = report.monodromy.iter().find(|r| r.divisor_type == AdeType::a(2)).unwrap();
        assert!(!a2_row.unipotent && a2_row.square_unipotent && a2_row.needs_stack);
        let a1_row = report.monodromy.iter().find(|r| r.divisor_type == AdeType::a(1)).unwrap();
        assert!(a1_row.unipotent);
        assert!(report.local_cover.is_some());
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn divisor_report_tacnode_curve() {
        let report = divisor_report(&spec(3, "A3")).unwrap();
        let counts: Vec<(String, u64)> = report
            .divisor_counts
            .iter()
            .map(|d| (d.divisor_type.to_string(), d.count))
            .collect();
        assert_eq!(counts, vec![("A1".into(), 6), ("A2".into(), 4), ("A3".into(), 1)]);
        assert_eq!(report.stack_loci, vec![AdeType::a(2)]);
    }

    #[test]
    fn divisor_report_nodal_curve() {
        let report = divisor_report(&spec(2, "A1")).unwrap();
        assert_eq!(report.divisor_counts.len(), 1);
        assert_eq!(report.divisor_counts[0].count, 1);
        assert!(report.stack_loci.is_empty());
        assert!(report.local_cover.is_none());
        assert!(report.monodromy[0].unipotent);
    }

    #[test]
    fn surface_mode_needs_no_stack() {
        let report = divisor_report(&spec(3, "A2,A4").with_dim(2)).unwrap();
        assert!(report.stack_loci.is_empty());
        assert!(report.monodromy.iter().all(|r| r.unipotent));
    }

    #[test]
    fn stack_loci_iff_a_even_divisor_present() {
        // every factor of rank ≥ 2 contains an A2 full subdiagram, so the
        // stack loci are empty exactly for purely nodal configurations
        for (s, expect) in [
            ("A1", false),
            ("A1,A1,A1", false),
            ("A1,A3", true),
            ("A2", true),
            ("D4", true),
            ("A1,A4", true),
        ] {
            let report = divisor_report(&spec(4, s)).unwrap();
            assert_eq!(!report.stack_loci.is_empty(), expect, "{s}");
            let has_a_even_divisor = report
                .divisor_counts
                .iter()
                .any(|d| d.divisor_type.family() == AdeFamily::A && d.divisor_type.index() % 2 == 0);
            assert_eq!(!report.stack_loci.is_empty(), has_a_even_divisor, "{s}");
        }
    }

    #[test]
    fn report_counts_match_wonderful() {
        let cs = spec(4, "A2,A1");
        let report = divisor_report(&cs).unwrap();
        let rs = RootSystem::product(cs.singularities.factors()).unwrap();
        let census = divisor_census(&rs);
        assert_eq!(report.divisor_counts.len(), census.len());
        for (d, (t, count)) in report.divisor_counts.iter().zip(census) {
            assert_eq!(d.divisor_type, t);
            assert_eq!(d.count, count);
        }
    }

    #[test]
    fn deformation_dim_additivity() {
        let cs = spec(5, "A2,D4,A1");
        let ds = deformation_structure(&cs);
        let rs = RootSystem::product(cs.singularities.factors()).unwrap();
        assert_eq!(ds.total_singularity_dim, rs.rank());
    }

    #[test]
    fn tails_examples() {
        let TailInfo::Hyperelliptic { description, aut_order, .. } =
            tail_description(AdeType::a(4), 5).unwrap()
        else {
            panic!("A4 has a hyperelliptic tail");
        };
        assert_eq!(description.tail_genus, 2);
        assert_eq!(description.attachment, crate::an_reduction::Attachment::OneWeierstrassPoint);
        assert_eq!(aut_order, 2);

        let TailInfo::Hyperelliptic { description, aut_order, .. } =
            tail_description(AdeType::a(5), 5).unwrap()
        else {
            panic!()
        };
        assert_eq!(description.tail_genus, 2);
        assert_eq!(description.attachment, crate::an_reduction::Attachment::TwoConjugatePoints);
        assert_eq!(aut_order, 1);

        // the g = n + 1 exception for A3 (n = 1): aut order 2 at g = 2
        let TailInfo::Hyperelliptic { description, aut_order, .. } =
            tail_description(AdeType::a(3), 2).unwrap()
        else {
            panic!()
        };
        assert_eq!(description.tail_genus, 1);
        assert_eq!(aut_order, 2);
        let TailInfo::Hyperelliptic { aut_order, .. } = tail_description(AdeType::a(3), 3).unwrap()
        else {
            panic!()
        };
        assert_eq!(aut_order, 1);

        assert!(matches!(
            tail_description(AdeType::d(4), 3).unwrap(),
            TailInfo::SeeHassett { .. }
        ));
        assert!(tail_description(AdeType::a(2), 1).is_err());
    }

    #[test]
    fn local_cover_shapes() {
        let one = local_cover_equations(1, CoverVariant::Double);
        assert_eq!(one[0].to_string(), "t1^2 - x1");
        let one_cw = local_cover_equations(1, CoverVariant::Coordinatewise);
        assert_eq!(one, one_cw);

        let double = local_cover_equations(2, CoverVariant::Double);
        assert_eq!(double.len(), 1);
        assert_eq!(double[0].to_string(), "t^2 - x1*x2");

        let cw = local_cover_equations(3, CoverVariant::Coordinatewise);
        let shown: Vec<String> = cw.iter().map(MPoly::to_string).collect();
        assert_eq!(shown, vec!["t1^2 - x1", "t2^2 - x2", "t3^2 - x3"]);

        assert!(local_cover(2, CoverVariant::Double).base_note.contains("toric"));
        assert!(local_cover(2, CoverVariant::Coordinatewise).base_note.contains("smooth"));
    }

    #[test]
    fn genus_warning() {
        let report = divisor_report(&spec(0, "A1")).unwrap();
        assert!(!report.warnings.is_empty());
    }
}
