//! Star-localisable semigroups: the star axioms `8.1a`–`8.1e`, the derived
//! projections `x⁺ = xx∗`, `x⁻ = x∗x`, and the compatibility check between
//! an inverse mapping and separately supplied `+`/`-` maps.
//!
//! The involution law `x∗∗ = x` and the linking laws `8.3a/b` are checked as
//! derived identities, never required as input.

use crate::axioms::{self, AxiomId, AxiomReport};
use crate::semigroup::FiniteUnarySemigroup;
use crate::{Error, UnaryOp};

/// All star reports: the defining `8.1a`–`8.1e` followed by the derived
/// `8.2`, `8.3a` and `8.3b`.
pub const STAR_REPORT_IDS: &[AxiomId] = &[
    AxiomId::Star_a,
    AxiomId::Star_b,
    AxiomId::Star_c,
    AxiomId::Star_d,
    AxiomId::Star_e,
    AxiomId::StarInvolution,
    AxiomId::StarLink_a,
    AxiomId::StarLink_b,
];

/// Checks `8.1a`–`8.1e` plus the derived identities `8.2` and `8.3a/b`.
pub fn check_star_axioms(s: &FiniteUnarySemigroup) -> Result<Vec<AxiomReport>, Error> {
    s.require(UnaryOp::Star)?;
    axioms::check_axioms(s, STAR_REPORT_IDS)
}

/// First failure among the defining axioms `8.1a`–`8.1e`, if any.
pub fn star_axiom_failure(
    s: &FiniteUnarySemigroup,
) -> Result<Option<(AxiomId, Vec<usize>)>, Error> {
    s.require(UnaryOp::Star)?;
    axioms::first_failure(s, axioms::STAR_LOCALISABLE)
}

pub fn is_star_localisable(s: &FiniteUnarySemigroup) -> Result<bool, Error> {
    Ok(star_axiom_failure(s)?.is_none())
}

/// Fills in `x⁺ = xx∗` and `x⁻ = x∗x` on a star-localisable semigroup.
///
/// The output is asserted to pass the full localisable suite.
pub fn derive_projections_from_star(
    s: &FiniteUnarySemigroup,
) -> Result<FiniteUnarySemigroup, Error> {
    if let Some((axiom, witness)) = star_axiom_failure(s)? {
        return Err(Error::StarAxiomsFail { axiom, witness });
    }
    let n = s.order();
    let plus: Vec<usize> = (0..n).map(|x| s.mul(x, s.star_of(x))).collect();
    let minus: Vec<usize> = (0..n).map(|x| s.mul(s.star_of(x), x)).collect();
    let out = s
        .with_unary(UnaryOp::Plus, plus)?
        .with_unary(UnaryOp::Minus, minus)?;
    if let Some((axiom, witness)) = axioms::first_failure(&out, axioms::LOCALISABLE)? {
        panic!("derived projections violate {axiom} at {witness:?}");
    }
    Ok(out)
}

/// Why an element set fails to be an orthodox band of projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrthodoxyFailure {
    /// An idempotent `x` with `x ≠ x⁺` or `x ≠ x⁻` (projections derived
    /// from the star map).
    IdempotentNotProjection { x: usize, plus: usize, minus: usize },
    /// Two idempotents whose product is not idempotent.
    IdempotentsNotClosed { x: usize, y: usize },
}

/// On a star-localisable semigroup, verifies that every idempotent is a
/// projection and that the idempotents are closed under multiplication.
///
/// Both facts hold in every star-localisable semigroup; the scan returns the
/// first counterexample if the input only pretends to be one.
pub fn idempotents_are_projections(
    s: &FiniteUnarySemigroup,
) -> Result<Option<OrthodoxyFailure>, Error> {
    if let Some((axiom, witness)) = star_axiom_failure(s)? {
        return Err(Error::StarAxiomsFail { axiom, witness });
    }
    let idempotents: Vec<usize> = s.idempotents();
    for &x in &idempotents {
        let plus = s.mul(x, s.star_of(x));
        let minus = s.mul(s.star_of(x), x);
        if plus != x || minus != x {
            return Ok(Some(OrthodoxyFailure::IdempotentNotProjection {
                x,
                plus,
                minus,
            }));
        }
    }
    for &x in &idempotents {
        for &y in &idempotents {
            let xy = s.mul(x, y);
            if s.mul(xy, xy) != xy {
                return Ok(Some(OrthodoxyFailure::IdempotentsNotClosed { x, y }));
            }
        }
    }
    Ok(None)
}

/// A point where the supplied `+`/`-` maps disagree with the star-derived
/// projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCompatibilityWitness {
    pub element: usize,
    /// The unary map that disagrees (`+` or `-`).
    pub op: UnaryOp,
    /// The supplied `x⁺` (or `x⁻`).
    pub unary_value: usize,
    /// The derived `x·x∗` (or `x∗·x`).
    pub product: usize,
}

/// Checks `x⁺ = x·x∗` and `x⁻ = x∗·x` on a localisable semigroup carrying an
/// inverse mapping (`8.1a`, `8.1b`).
///
/// Returns the first disagreement, or `None` when compatible — in which case
/// the full `8.1` suite is asserted to hold.
pub fn check_star_compatibility(
    s: &FiniteUnarySemigroup,
) -> Result<Option<StarCompatibilityWitness>, Error> {
    s.require(UnaryOp::Plus)?;
    s.require(UnaryOp::Minus)?;
    s.require(UnaryOp::Star)?;
    if let Some((axiom, witness)) = axioms::first_failure(s, axioms::LOCALISABLE)? {
        return Err(Error::NotLocalisable { axiom, witness });
    }
    if let Some((axiom, witness)) = axioms::first_failure(s, axioms::REGULAR_UNARY)? {
        return Err(Error::StarAxiomsFail { axiom, witness });
    }
    for x in 0..s.order() {
        let xxs = s.mul(x, s.star_of(x));
        if s.plus_of(x) != xxs {
            return Ok(Some(StarCompatibilityWitness {
                element: x,
                op: UnaryOp::Plus,
                unary_value: s.plus_of(x),
                product: xxs,
            }));
        }
        let xsx = s.mul(s.star_of(x), x);
        if s.minus_of(x) != xsx {
            return Ok(Some(StarCompatibilityWitness {
                element: x,
                op: UnaryOp::Minus,
                unary_value: s.minus_of(x),
                product: xsx,
            }));
        }
    }
    // A compatible inverse mapping on a localisable semigroup satisfies the
    // remaining star axioms.
    if let Some((axiom, witness)) = star_axiom_failure(s)? {
        panic!("compatible star map violates {axiom} at {witness:?}");
    }
    Ok(None)
}

/// Whether `(xy)∗ = y∗x∗` holds universally; returns the first failing pair
/// otherwise.
pub fn star_antiautomorphism_check(
    s: &FiniteUnarySemigroup,
) -> Result<Option<(usize, usize)>, Error> {
    s.require(UnaryOp::Star)?;
    let n = s.order();
    for x in 0..n {
        for y in 0..n {
            if s.star_of(s.mul(x, y)) != s.mul(s.star_of(y), s.star_of(x)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}
