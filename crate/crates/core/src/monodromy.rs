//! The classical monodromy operator on the vanishing lattice and the
//! unipotency classification of boundary monodromy.
//!
//! For a singularity of type `T_n` in dimension `d`, the operator on the
//! rank-n vanishing lattice is `(−1)^d · c` with `c` the Coxeter element;
//! the monodromy of a generic simple loop around the origin of the Weyl
//! cover is its h-th power, which is `−Id` exactly when `d` is odd and
//! `T_n = A_n` with `n` even, and `Id` otherwise. Boundary divisors of the
//! wonderful blow-up inherit the classification of their indexing type.

use serde::Serialize;

use crate::linalg::{cyclotomic_multiplicities, euler_phi, IntMatrix};
use crate::roots::{AdeFamily, AdeType, RootSystem};
use crate::wonderful::DivisorComponent;
use crate::{Error, Result};

/// Action of the origin loop on the vanishing lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VanishingOperator {
    Identity,
    MinusIdentity,
}

/// Unipotency classification of a loop's monodromy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonodromyClass {
    pub operator_on_vanishing: VanishingOperator,
    pub unipotent: bool,
    pub square_unipotent: bool,
}

impl MonodromyClass {
    fn from_operator(op: VanishingOperator) -> MonodromyClass {
        match op {
            VanishingOperator::Identity => MonodromyClass {
                operator_on_vanishing: op,
                unipotent: true,
                square_unipotent: true,
            },
            VanishingOperator::MinusIdentity => MonodromyClass {
                operator_on_vanishing: op,
                unipotent: false,
                square_unipotent: true,
            },
        }
    }
}

/// The classical monodromy operator `(−1)^d · c` on the root lattice of the
/// singularity type (the vanishing cohomology is isometric to that
/// lattice). Its order divides `2h`.
#[derive(Debug, Clone)]
pub struct ClassicalOperator {
    pub matrix: IntMatrix,
    pub singularity: AdeType,
    pub dimension: u32,
    pub coxeter_number: u64,
}

impl ClassicalOperator {
    pub fn dimension_is_odd(&self) -> bool {
        self.dimension % 2 == 1
    }
}

pub fn classical_operator(t: AdeType, d: u32) -> ClassicalOperator {
    assert!(d >= 1, "dimension must be at least 1");
    let rs = RootSystem::build(t);
    let c = rs.coxeter_element();
    let h = c.order(4 * t.rank() as u64 + 4).expect("Coxeter element has finite order");
    let matrix = if d % 2 == 1 { c.matrix.neg() } else { c.matrix };
    ClassicalOperator { matrix, singularity: t, dimension: d, coxeter_number: h }
}

/// Multiplicative orders of all eigenvalues of the operator, as a sorted
/// multiset, computed by exact cyclotomic factorization with bound `2h`.
pub fn eigenvalue_orders(op: &ClassicalOperator) -> Result<Vec<u64>> {
    let mults = cyclotomic_multiplicities(&op.matrix.char_poly(), op.coxeter_number)?;
    let mut orders = Vec::new();
    for (d, count) in mults {
        debug_assert_eq!(count % euler_phi(d), 0);
        for _ in 0..count {
            orders.push(d);
        }
    }
    orders.sort_unstable();
    Ok(orders)
}

/// Classification of the monodromy of a generic simple loop around the
/// origin in the Weyl cover: computes `((−1)^d c)^h` by exact matrix
/// powering, classifies the result, and checks it against the closed form
/// (−Id iff d odd and type A with even index).
pub fn origin_loop_monodromy(t: AdeType, d: u32) -> MonodromyClass {
    let op = classical_operator(t, d);
    let power = op.matrix.pow(op.coxeter_number);
    let computed = if power.is_identity() {
        VanishingOperator::Identity
    } else if power.is_neg_identity() {
        VanishingOperator::MinusIdentity
    } else {
        unreachable!("(±c)^h must be ±Id for an ADE Coxeter element")
    };
    let exceptional = d % 2 == 1 && t.family() == AdeFamily::A && t.index() % 2 == 0;
    let expected = if exceptional {
        VanishingOperator::MinusIdentity
    } else {
        VanishingOperator::Identity
    };
    assert_eq!(computed, expected, "origin-loop monodromy disagrees with the closed form");
    MonodromyClass::from_operator(computed)
}

/// Monodromy along a generic simple loop around a boundary divisor of the
/// wonderful blow-up, classified by the divisor's irreducible type.
pub fn divisor_monodromy(dc: &DivisorComponent, d: u32) -> Result<MonodromyClass> {
    let t = dc
        .flat
        .type_label
        .irreducible_factor()
        .ok_or_else(|| Error::ReducibleFlat(dc.flat.type_label.to_string()))?;
    Ok(divisor_monodromy_of_type(t, d))
}

/// Same classification keyed directly by the irreducible divisor type.
pub fn divisor_monodromy_of_type(t: AdeType, d: u32) -> MonodromyClass {
    origin_loop_monodromy(t, d)
}

/// True when extending a family over a divisor of this type requires stack
/// structure (generically ℤ/2 stabilizers): d odd and type A with even
/// index.
pub fn needs_stack(t: AdeType, d: u32) -> bool {
    d % 2 == 1 && t.family() == AdeFamily::A && t.index() % 2 == 0
}

/// One row of the classification table.
#[derive(Debug, Clone, Serialize)]
pub struct MonodromyRow {
    pub divisor_type: AdeType,
    pub dim: u32,
    pub unipotent: bool,
    pub square_unipotent: bool,
    pub needs_stack: bool,
}

pub fn classification_row(t: AdeType, d: u32) -> MonodromyRow {
    let class = origin_loop_monodromy(t, d);
    MonodromyRow {
        divisor_type: t,
        dim: d,
        unipotent: class.unipotent,
        square_unipotent: class.square_unipotent,
        needs_stack: needs_stack(t, d),
    }
}
