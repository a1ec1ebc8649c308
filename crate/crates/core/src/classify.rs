//! Aggregated classification of a unary semigroup into the named classes.
//!
//! Predicates that need an absent unary map report "not applicable" rather
//! than failing, so one-sided structures get honest partial reports.

use crate::axioms::{self, AxiomId};
use crate::semigroup::FiniteUnarySemigroup;
use crate::{relations, starloc, Error, UnaryOp};

/// The predicates a classification report covers, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassPredicate {
    LeftLocalisable,
    RightLocalisable,
    Localisable,
    ProjectionBand,
    CommutingProjections,
    LeftEhresmann,
    RightEhresmann,
    Ehresmann,
    Restriction,
    ReducedMonoid,
    StarLocalisable,
    Fundamental,
}

impl ClassPredicate {
    pub const ALL: &'static [ClassPredicate] = &[
        ClassPredicate::LeftLocalisable,
        ClassPredicate::RightLocalisable,
        ClassPredicate::Localisable,
        ClassPredicate::ProjectionBand,
        ClassPredicate::CommutingProjections,
        ClassPredicate::LeftEhresmann,
        ClassPredicate::RightEhresmann,
        ClassPredicate::Ehresmann,
        ClassPredicate::Restriction,
        ClassPredicate::ReducedMonoid,
        ClassPredicate::StarLocalisable,
        ClassPredicate::Fundamental,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClassPredicate::LeftLocalisable => "left-localisable",
            ClassPredicate::RightLocalisable => "right-localisable",
            ClassPredicate::Localisable => "localisable",
            ClassPredicate::ProjectionBand => "projection-band",
            ClassPredicate::CommutingProjections => "commuting-projections",
            ClassPredicate::LeftEhresmann => "left-ehresmann",
            ClassPredicate::RightEhresmann => "right-ehresmann",
            ClassPredicate::Ehresmann => "ehresmann",
            ClassPredicate::Restriction => "restriction",
            ClassPredicate::ReducedMonoid => "reduced-monoid",
            ClassPredicate::StarLocalisable => "star-localisable",
            ClassPredicate::Fundamental => "fundamental",
        }
    }
}

/// Outcome of one predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateStatus {
    Holds,
    Fails {
        /// The violated axiom, when the predicate is axiom-defined.
        axiom: Option<AxiomId>,
        witness: Vec<usize>,
    },
    /// A required unary map is absent.
    NotApplicable,
}

/// Named predicate outcomes with failure witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub entries: Vec<(ClassPredicate, PredicateStatus)>,
}

impl ClassificationReport {
    pub fn status(&self, predicate: ClassPredicate) -> &PredicateStatus {
        &self
            .entries
            .iter()
            .find(|(p, _)| *p == predicate)
            .expect("every predicate is reported")
            .1
    }

    pub fn holds(&self, predicate: ClassPredicate) -> bool {
        matches!(self.status(predicate), PredicateStatus::Holds)
    }
}

fn axiom_status(s: &FiniteUnarySemigroup, ids: &[AxiomId]) -> PredicateStatus {
    match axioms::first_failure(s, ids) {
        Ok(None) => PredicateStatus::Holds,
        Ok(Some((axiom, witness))) => PredicateStatus::Fails {
            axiom: Some(axiom),
            witness,
        },
        Err(Error::MissingUnary(_)) => PredicateStatus::NotApplicable,
        Err(e) => unreachable!("axiom suites only fail on missing maps: {e}"),
    }
}

fn projection_band_status(s: &FiniteUnarySemigroup) -> PredicateStatus {
    let Ok(projections) = s.projections() else {
        return PredicateStatus::NotApplicable;
    };
    for &p in &projections {
        if s.mul(p, p) != p {
            return PredicateStatus::Fails {
                axiom: None,
                witness: vec![p],
            };
        }
        for &q in &projections {
            if !projections.contains(&s.mul(p, q)) {
                return PredicateStatus::Fails {
                    axiom: None,
                    witness: vec![p, q],
                };
            }
        }
    }
    PredicateStatus::Holds
}

fn reduced_monoid_status(s: &FiniteUnarySemigroup) -> PredicateStatus {
    if !s.has(UnaryOp::Plus) || !s.has(UnaryOp::Minus) {
        return PredicateStatus::NotApplicable;
    }
    let Some(one) = s.identity() else {
        return PredicateStatus::Fails {
            axiom: None,
            witness: vec![],
        };
    };
    match (0..s.order()).find(|&x| s.plus_of(x) != one || s.minus_of(x) != one) {
        Some(x) => PredicateStatus::Fails {
            axiom: None,
            witness: vec![x],
        },
        None => PredicateStatus::Holds,
    }
}

fn star_status(s: &FiniteUnarySemigroup) -> PredicateStatus {
    match starloc::star_axiom_failure(s) {
        Ok(None) => {}
        Ok(Some((axiom, witness))) => {
            return PredicateStatus::Fails {
                axiom: Some(axiom),
                witness,
            }
        }
        Err(_) => return PredicateStatus::NotApplicable,
    }
    // Separately supplied +/- maps must agree with the star-derived ones
    // before any classification trusts the star.
    if s.has(UnaryOp::Plus) && s.has(UnaryOp::Minus) {
        if let Ok(Some(witness)) = starloc::check_star_compatibility(s) {
            return PredicateStatus::Fails {
                axiom: None,
                witness: vec![witness.element],
            };
        }
    }
    PredicateStatus::Holds
}

fn fundamental_status(s: &FiniteUnarySemigroup) -> PredicateStatus {
    if !axioms::satisfies(s, axioms::LOCALISABLE) {
        return PredicateStatus::NotApplicable;
    }
    let mu = relations::mu_relation(s).expect("localisable checked above");
    let nontrivial = mu.pairs().find(|&(a, b)| a != b);
    match nontrivial {
        None => PredicateStatus::Holds,
        Some((a, b)) => PredicateStatus::Fails {
            axiom: None,
            witness: vec![a, b],
        },
    }
}

/// Runs every class predicate, tolerating missing unary maps.
pub fn classify(s: &FiniteUnarySemigroup) -> ClassificationReport {
    let entries = ClassPredicate::ALL
        .iter()
        .map(|&predicate| {
            let status = match predicate {
                ClassPredicate::LeftLocalisable => axiom_status(s, axioms::LEFT_LOCALISABLE),
                ClassPredicate::RightLocalisable => axiom_status(s, axioms::RIGHT_LOCALISABLE),
                ClassPredicate::Localisable => axiom_status(s, axioms::LOCALISABLE),
                ClassPredicate::ProjectionBand => projection_band_status(s),
                ClassPredicate::CommutingProjections => axiom_status(s, &[AxiomId::Cp]),
                ClassPredicate::LeftEhresmann => axiom_status(s, axioms::LEFT_EHRESMANN),
                ClassPredicate::RightEhresmann => axiom_status(s, axioms::RIGHT_EHRESMANN),
                ClassPredicate::Ehresmann => axiom_status(s, axioms::EHRESMANN),
                ClassPredicate::Restriction => axiom_status(s, axioms::RESTRICTION),
                ClassPredicate::ReducedMonoid => reduced_monoid_status(s),
                ClassPredicate::StarLocalisable => star_status(s),
                ClassPredicate::Fundamental => fundamental_status(s),
            };
            (predicate, status)
        })
        .collect();
    ClassificationReport { entries }
}
