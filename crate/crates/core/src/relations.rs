//! Binary relations on a structure's elements: the generalised Green
//! preorder `~≤R` and its symmetric core `~R̃`, abundance and uniqueness
//! predicates, the natural and Mitsch orders, the relation `μ`, and
//! exhaustive congruence enumeration.

use crate::axioms::{self};
use crate::semigroup::FiniteUnarySemigroup;
use crate::{Error, UnaryOp};

/// What a relation claims to be; verified on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    Preorder,
    Equivalence,
    PartialOrder,
    Congruence,
}

/// An `n × n` boolean matrix over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    n: usize,
    kind: RelationKind,
    bits: Vec<bool>,
}

impl BinaryRelation {
    /// Builds a relation from a membership predicate and verifies the matrix
    /// laws of its kind. With a context, `Congruence` additionally verifies
    /// compatibility with multiplication.
    pub fn from_fn(
        n: usize,
        kind: RelationKind,
        context: Option<&FiniteUnarySemigroup>,
        mut f: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let mut bits = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                bits[a * n + b] = f(a, b);
            }
        }
        let rel = Self { n, kind, bits };
        rel.assert_kind(context);
        rel
    }

    fn assert_kind(&self, context: Option<&FiniteUnarySemigroup>) {
        assert!(self.is_reflexive(), "{:?} must be reflexive", self.kind);
        assert!(self.is_transitive(), "{:?} must be transitive", self.kind);
        match self.kind {
            RelationKind::Preorder => {}
            RelationKind::PartialOrder => {
                assert!(self.is_antisymmetric(), "partial order must be antisymmetric")
            }
            RelationKind::Equivalence | RelationKind::Congruence => {
                assert!(self.is_symmetric(), "{:?} must be symmetric", self.kind);
                if self.kind == RelationKind::Congruence {
                    if let Some(s) = context {
                        assert!(
                            self.is_congruence(s),
                            "congruence must be compatible with multiplication"
                        );
                    }
                }
            }
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, RelationKind::Equivalence, None, |a, b| a == b)
    }

    pub fn universal(n: usize) -> Self {
        Self::from_fn(n, RelationKind::Equivalence, None, |_, _| true)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n).filter(|i| self.bits[*i]).map(move |i| (i / n, i % n))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.contains(a, b) == (a == b)))
    }

    pub fn subset_of(&self, other: &BinaryRelation) -> bool {
        assert_eq!(self.n, other.n);
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(&mine, &theirs)| !mine || theirs)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.contains(a, b) == self.contains(b, a)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n)
            .all(|a| (0..self.n).all(|b| a == b || !self.contains(a, b) || !self.contains(b, a)))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                !self.contains(a, b)
                    || (0..self.n).all(|c| !self.contains(b, c) || self.contains(a, c))
            })
        })
    }

    /// Classes of an equivalence-like relation, ordered by least member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        assert!(
            matches!(self.kind, RelationKind::Equivalence | RelationKind::Congruence),
            "classes need an equivalence"
        );
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for a in 0..self.n {
            if seen[a] {
                continue;
            }
            let class: Vec<usize> = (0..self.n).filter(|&b| self.contains(a, b)).collect();
            for &b in &class {
                seen[b] = true;
            }
            out.push(class);
        }
        out
    }

    /// Compatibility with multiplication on both sides.
    pub fn is_congruence(&self, s: &FiniteUnarySemigroup) -> bool {
        let n = self.n;
        self.pairs().all(|(a, b)| {
            (0..n).all(|x| {
                self.contains(s.mul(a, x), s.mul(b, x)) && self.contains(s.mul(x, a), s.mul(x, b))
            })
        })
    }

    /// Compatibility with `+` and `-` on top of being a congruence.
    pub fn is_pm_congruence(&self, s: &FiniteUnarySemigroup) -> bool {
        self.is_congruence(s)
            && self.pairs().all(|(a, b)| {
                self.contains(s.plus_of(a), s.plus_of(b))
                    && self.contains(s.minus_of(a), s.minus_of(b))
            })
    }

    /// Whether related projections are always equal.
    pub fn is_projection_separating(&self, s: &FiniteUnarySemigroup) -> Result<bool, Error> {
        let projections = s.projections()?;
        Ok(projections.iter().all(|&p| {
            projections
                .iter()
                .all(|&q| p == q || !self.contains(p, q))
        }))
    }
}

fn require_localisable(s: &FiniteUnarySemigroup) -> Result<(), Error> {
    match axioms::first_failure(s, axioms::LOCALISABLE) {
        Ok(None) => Ok(()),
        Ok(Some((axiom, witness))) => Err(Error::NotLocalisable { axiom, witness }),
        Err(e) => Err(e),
    }
}

/// The preorder `s ~≤R t`: every projection fixing `t` on the left also
/// fixes `s`.
///
/// On left localisable input the four equivalent characterisations
/// (`s ~≤R t`, `s⁺ ~≤R t⁺`, `t⁺s⁺ = s⁺`, `s = t⁺s`) are asserted to agree.
pub fn swung_leq_r(s: &FiniteUnarySemigroup) -> Result<BinaryRelation, Error> {
    let plus = s.require(UnaryOp::Plus)?.to_vec();
    let n = s.order();
    let projections = s.projections()?;
    // fixers[t]: which projections p satisfy pt = t.
    let fixers: Vec<Vec<usize>> = (0..n)
        .map(|t| {
            projections
                .iter()
                .copied()
                .filter(|&p| s.mul(p, t) == t)
                .collect()
        })
        .collect();
    let rel = BinaryRelation::from_fn(n, RelationKind::Preorder, None, |a, b| {
        fixers[b].iter().all(|&p| s.mul(p, a) == a)
    });
    if axioms::satisfies(s, axioms::LEFT_LOCALISABLE) {
        for a in 0..n {
            for b in 0..n {
                let i = rel.contains(a, b);
                let ii = rel.contains(plus[a], plus[b]);
                let iii = s.mul(plus[b], plus[a]) == plus[a];
                let iv = s.mul(plus[b], a) == a;
                assert!(
                    i == ii && ii == iii && iii == iv,
                    "the four ~≤R characterisations must agree at ({a},{b})"
                );
            }
        }
    }
    Ok(rel)
}

/// The equivalence `~R̃`, the symmetric core of `~≤R`.
pub fn swung_r(s: &FiniteUnarySemigroup) -> Result<BinaryRelation, Error> {
    let leq = swung_leq_r(s)?;
    Ok(BinaryRelation::from_fn(
        s.order(),
        RelationKind::Equivalence,
        None,
        |a, b| leq.contains(a, b) && leq.contains(b, a),
    ))
}

pub fn swung_r_classes(s: &FiniteUnarySemigroup) -> Result<Vec<Vec<usize>>, Error> {
    Ok(swung_r(s)?.classes())
}

fn check_idempotent_set(s: &FiniteUnarySemigroup, set: &[usize]) -> Result<(), Error> {
    for &x in set {
        if x >= s.order() {
            return Err(Error::IndexOutOfRange {
                table: "E",
                index: 0,
                value: x,
                order: s.order(),
            });
        }
        if s.mul(x, x) != x {
            return Err(Error::NotIdempotent(x));
        }
    }
    Ok(())
}

/// Whether every `~R̃`-class contains an element of `E`.
pub fn is_weakly_left_e_abundant(
    s: &FiniteUnarySemigroup,
    e_set: &[usize],
) -> Result<bool, Error> {
    check_idempotent_set(s, e_set)?;
    Ok(swung_r(s)?
        .classes()
        .iter()
        .all(|class| class.iter().any(|x| e_set.contains(x))))
}

/// Whether every `~R̃`-class contains exactly one element of `E`; returns
/// the first offending class otherwise.
pub fn is_generalised_d(
    s: &FiniteUnarySemigroup,
    e_set: &[usize],
) -> Result<Option<Vec<usize>>, Error> {
    check_idempotent_set(s, e_set)?;
    Ok(swung_r(s)?
        .classes()
        .into_iter()
        .find(|class| class.iter().filter(|x| e_set.contains(x)).count() != 1))
}

/// Replaces `+` by `s ↦ s⊕`, the `X`-representative `~R̃`-related to `s⁺`.
///
/// `X` must pick exactly one projection from each `~R̃`-class. The identity
/// `s⊕ · s = s` is asserted on the result, which keeps only the new unary
/// map.
pub fn d_modification(
    s: &FiniteUnarySemigroup,
    cross_section: &[usize],
) -> Result<FiniteUnarySemigroup, Error> {
    let plus = s.require(UnaryOp::Plus)?.to_vec();
    if let Some((axiom, witness)) = axioms::first_failure(s, axioms::LEFT_LOCALISABLE)? {
        return Err(Error::NotLocalisable { axiom, witness });
    }
    let projections = s.projections()?;
    for &x in cross_section {
        if !projections.contains(&x) {
            return Err(Error::NotACrossSection(format!(
                "element {x} is not a projection"
            )));
        }
    }
    let classes = swung_r(s)?.classes();
    let n = s.order();
    let mut class_rep = vec![usize::MAX; n];
    for class in &classes {
        let reps: Vec<usize> = class
            .iter()
            .copied()
            .filter(|x| cross_section.contains(x))
            .collect();
        if reps.len() != 1 {
            return Err(Error::NotACrossSection(format!(
                "class {class:?} contains {} representatives",
                reps.len()
            )));
        }
        for &x in class {
            class_rep[x] = reps[0];
        }
    }
    let oplus: Vec<usize> = (0..n).map(|x| class_rep[plus[x]]).collect();
    for x in 0..n {
        assert_eq!(s.mul(oplus[x], x), x, "s⊕ · s = s must hold");
    }
    Ok(s
        .with_unary(UnaryOp::Plus, oplus)?
        .without_unary(UnaryOp::Minus)
        .without_unary(UnaryOp::Star))
}

/// The Mitsch order `s ≤M t`: `s = t` or `s = xt = ty = xty` for some `x, y`.
pub fn mitsch_order(s: &FiniteUnarySemigroup) -> BinaryRelation {
    let n = s.order();
    BinaryRelation::from_fn(n, RelationKind::PartialOrder, None, |a, b| {
        a == b
            || (0..n).any(|x| {
                s.mul(x, b) == a && (0..n).any(|y| s.mul(b, y) == a && s.mul(a, y) == a)
            })
    })
}

/// The natural order `s ⊴ t` (`s = s⁺t = ts⁻`) together with the Mitsch
/// order, on a localisable semigroup.
///
/// Asserts `⊴ ⊆ ≤M` and that the two coincide on projection pairs.
pub fn natural_orders(
    s: &FiniteUnarySemigroup,
) -> Result<(BinaryRelation, BinaryRelation), Error> {
    require_localisable(s)?;
    let n = s.order();
    let tri = BinaryRelation::from_fn(n, RelationKind::PartialOrder, None, |a, b| {
        s.mul(s.plus_of(a), b) == a && s.mul(b, s.minus_of(a)) == a
    });
    let mitsch = mitsch_order(s);
    assert!(tri.subset_of(&mitsch), "⊴ must refine the Mitsch order");
    let projections = s.projections()?;
    for &p in &projections {
        for &q in &projections {
            assert_eq!(
                tri.contains(p, q),
                mitsch.contains(p, q),
                "⊴ and ≤M must agree on the projection band"
            );
        }
    }
    Ok((tri, mitsch))
}

/// The relation `μ`: equal signs and equal sign-images under every
/// projection translation.
///
/// `μ` is asserted projection-separating, and the sign-free reformulation
/// (`(ps)± = (pt)±` and `(sp)± = (tp)±` for all projections `p`) is asserted
/// to produce the same relation.
pub fn mu_relation(s: &FiniteUnarySemigroup) -> Result<BinaryRelation, Error> {
    require_localisable(s)?;
    let n = s.order();
    let projections = s.projections()?;
    let rel = BinaryRelation::from_fn(n, RelationKind::Equivalence, None, |a, b| {
        s.plus_of(a) == s.plus_of(b)
            && s.minus_of(a) == s.minus_of(b)
            && projections.iter().all(|&p| {
                s.plus_of(s.mul(a, p)) == s.plus_of(s.mul(b, p))
                    && s.minus_of(s.mul(p, a)) == s.minus_of(s.mul(p, b))
            })
    });
    assert_eq!(
        rel,
        mu_remark_form(s)?,
        "the two formulations of μ must agree"
    );
    assert!(
        rel.is_projection_separating(s)?,
        "μ must be projection-separating"
    );
    Ok(rel)
}

/// The reformulated `μ`: `(ps)± = (pt)±` and `(sp)± = (tp)±` for all
/// projections `p`.
pub fn mu_remark_form(s: &FiniteUnarySemigroup) -> Result<BinaryRelation, Error> {
    require_localisable(s)?;
    let n = s.order();
    let projections = s.projections()?;
    Ok(BinaryRelation::from_fn(
        n,
        RelationKind::Equivalence,
        None,
        |a, b| {
            projections.iter().all(|&p| {
                let (pa, pb) = (s.mul(p, a), s.mul(p, b));
                let (ap, bp) = (s.mul(a, p), s.mul(b, p));
                s.plus_of(pa) == s.plus_of(pb)
                    && s.minus_of(pa) == s.minus_of(pb)
                    && s.plus_of(ap) == s.plus_of(bp)
                    && s.minus_of(ap) == s.minus_of(bp)
            })
        },
    ))
}

/// Whether `μ` is the identity relation.
pub fn is_fundamental(s: &FiniteUnarySemigroup) -> Result<bool, Error> {
    Ok(mu_relation(s)?.is_identity())
}

/// Whether `μ` happens to be a congruence on this instance (it need not be).
pub fn mu_is_congruence(s: &FiniteUnarySemigroup) -> Result<bool, Error> {
    Ok(mu_relation(s)?.is_congruence(s))
}

/// Which congruences to collect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceTag {
    /// Plain semigroup congruences.
    Semigroup,
    /// Congruences compatible with `+` and `-`.
    Pm,
    /// `±`-congruences that separate projections.
    ProjectionSeparatingPm,
}

/// Default bound on the order for congruence enumeration (Bell numbers grow
/// quickly).
pub const MAX_CONGRUENCE_ORDER: usize = 5;

/// All partitions of `0..n` in restricted-growth-string order.
fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(block: &mut Vec<usize>, pos: usize, max: usize, n: usize, f: &mut impl FnMut(&[usize])) {
        if pos == n {
            f(block);
            return;
        }
        for v in 0..=max + 1 {
            block[pos] = v;
            rec(block, pos + 1, max.max(v), n, f);
        }
    }
    let mut block = vec![0usize; n];
    if n == 0 {
        return;
    }
    rec(&mut block, 1, 0, n, f);
}

/// Exhaustively enumerates congruences of the requested tag, in
/// restricted-growth-string order of the underlying partitions.
pub fn congruences(
    s: &FiniteUnarySemigroup,
    tag: CongruenceTag,
) -> Result<Vec<BinaryRelation>, Error> {
    congruences_bounded(s, tag, MAX_CONGRUENCE_ORDER)
}

pub fn congruences_bounded(
    s: &FiniteUnarySemigroup,
    tag: CongruenceTag,
    max_order: usize,
) -> Result<Vec<BinaryRelation>, Error> {
    require_localisable(s)?;
    let n = s.order();
    if n > max_order {
        return Err(Error::OrderTooLarge {
            order: n,
            max: max_order,
        });
    }
    let projections = s.projections()?;
    let mut out = Vec::new();
    for_each_partition(n, &mut |block| {
        let related = |a: usize, b: usize| block[a] == block[b];
        let compatible = (0..n).all(|a| {
            (a..n).all(|b| {
                !related(a, b)
                    || (0..n).all(|x| {
                        related(s.mul(a, x), s.mul(b, x)) && related(s.mul(x, a), s.mul(x, b))
                    })
            })
        });
        if !compatible {
            return;
        }
        if tag != CongruenceTag::Semigroup {
            let pm = (0..n).all(|a| {
                (a..n).all(|b| {
                    !related(a, b)
                        || (related(s.plus_of(a), s.plus_of(b))
                            && related(s.minus_of(a), s.minus_of(b)))
                })
            });
            if !pm {
                return;
            }
        }
        if tag == CongruenceTag::ProjectionSeparatingPm {
            let separating = projections
                .iter()
                .all(|&p| projections.iter().all(|&q| p == q || !related(p, q)));
            if !separating {
                return;
            }
        }
        out.push(BinaryRelation::from_fn(
            n,
            RelationKind::Congruence,
            Some(s),
            |a, b| block[a] == block[b],
        ));
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn fixture_elements_relate_to_their_projections() {
        let s = instances::weakly_abundant_not_left_localisable();
        let r = swung_r(&s).unwrap();
        for x in 0..s.order() {
            assert!(r.contains(x, s.plus_of(x)), "x ~R̃ x⁺ fails at {x}");
        }
        assert!(is_weakly_left_e_abundant(&s, &[0, 1, 3]).unwrap());
        assert!(!is_weakly_left_e_abundant(&s, &[3]).unwrap());
    }

    #[test]
    fn weak_abundance_rejects_non_idempotent_sets() {
        let s = instances::weakly_abundant_not_left_localisable();
        // a·a = 0 ≠ a.
        assert_eq!(
            is_weakly_left_e_abundant(&s, &[2]).unwrap_err(),
            Error::NotIdempotent(2)
        );
    }

    #[test]
    fn band_preorder_matches_the_left_division_characterisation() {
        for band in [
            instances::left_zero_band(2),
            instances::right_zero_band(2),
            instances::chain_semilattice(3),
        ] {
            let rel = swung_leq_r(&band).unwrap();
            for a in 0..band.order() {
                for b in 0..band.order() {
                    assert_eq!(rel.contains(a, b), band.mul(b, a) == a);
                }
            }
        }
    }

    #[test]
    fn reduced_monoids_have_the_total_preorder() {
        let m = instances::reduced(&instances::cyclic_group(3).without_unary(UnaryOp::Star))
            .unwrap();
        let rel = swung_leq_r(&m).unwrap();
        assert!((0..3).all(|a| (0..3).all(|b| rel.contains(a, b))));
    }

    #[test]
    fn uniqueness_fails_exactly_for_the_right_zero_band() {
        // One universal ~R̃-class holding two idempotents.
        let rz = instances::right_zero_band(2);
        let witness = is_generalised_d(&rz, &[0, 1]).unwrap();
        assert_eq!(witness, Some(vec![0, 1]));
        // The left zero band has singleton classes, one projection each.
        let lz = instances::left_zero_band(2);
        assert_eq!(is_generalised_d(&lz, &[0, 1]).unwrap(), None);
        // Reduced monoids have one class containing exactly the identity.
        let m = instances::reduced(&instances::chain_semilattice(2)).unwrap();
        assert_eq!(is_generalised_d(&m, &[1]).unwrap(), None);
    }

    #[test]
    fn d_modification_on_the_single_class_band() {
        let rz = instances::right_zero_band(2);
        let out = d_modification(&rz, &[0]).unwrap();
        assert_eq!(out.unary(UnaryOp::Plus).unwrap(), &[0, 0]);
        assert!(!out.has(UnaryOp::Minus));
        // The result is a generalised D-semigroup for E = X.
        assert_eq!(is_generalised_d(&out, &[0]).unwrap(), None);
    }

    #[test]
    fn d_modification_keeps_plus_when_already_a_cross_section() {
        let lz = instances::left_zero_band(2);
        let out = d_modification(&lz, &[0, 1]).unwrap();
        assert_eq!(out.unary(UnaryOp::Plus).unwrap(), &[0, 1]);

        let m = instances::reduced(&instances::chain_semilattice(2)).unwrap();
        let out = d_modification(&m, &[1]).unwrap();
        assert_eq!(out.unary(UnaryOp::Plus).unwrap(), &[1, 1]);
    }

    #[test]
    fn non_cross_sections_are_rejected() {
        let rz = instances::right_zero_band(2);
        assert!(matches!(
            d_modification(&rz, &[0, 1]),
            Err(Error::NotACrossSection(_))
        ));
        assert!(matches!(
            d_modification(&rz, &[]),
            Err(Error::NotACrossSection(_))
        ));
    }

    #[test]
    fn natural_order_is_identity_on_reduced_monoids() {
        let m = instances::reduced(&instances::cyclic_group(3).without_unary(UnaryOp::Star))
            .unwrap();
        let (tri, _) = natural_orders(&m).unwrap();
        assert!(tri.is_identity());
    }

    #[test]
    fn natural_order_on_bands_is_two_sided_division() {
        let band = instances::rectangular_band(2, 2);
        let (tri, _) = natural_orders(&band).unwrap();
        for a in 0..band.order() {
            for b in 0..band.order() {
                let expected = band.mul(a, b) == a && band.mul(b, a) == a;
                assert_eq!(tri.contains(a, b), expected);
            }
        }
    }

    #[test]
    fn chain_order_recovers_the_chain() {
        let chain = instances::chain_semilattice(2);
        let (tri, mitsch) = natural_orders(&chain).unwrap();
        assert!(tri.contains(0, 1), "0 ⊴ 1");
        assert!(!tri.contains(1, 0));
        assert!(mitsch.contains(0, 1));
    }

    #[test]
    fn mu_is_trivial_on_bands_and_universal_on_reduced_monoids() {
        let band = instances::rectangular_band(2, 2);
        assert!(mu_relation(&band).unwrap().is_identity());
        assert!(is_fundamental(&band).unwrap());

        let m = instances::reduced(&instances::cyclic_group(3).without_unary(UnaryOp::Star))
            .unwrap();
        let mu = mu_relation(&m).unwrap();
        // Definition scan: with a single projection 1, all four conditions
        // collapse to 1 = 1.
        assert_eq!(mu, BinaryRelation::universal(3));
        assert!(!is_fundamental(&m).unwrap());

        let chain = instances::reduced(&instances::chain_semilattice(2)).unwrap();
        assert!(!is_fundamental(&chain).unwrap());
    }

    #[test]
    fn identity_partition_is_always_a_pm_congruence() {
        for s in [
            instances::left_zero_band(3),
            instances::chain_semilattice(3),
            instances::reduced(&instances::cyclic_group(4).without_unary(UnaryOp::Star)).unwrap(),
        ] {
            let all = congruences(&s, CongruenceTag::Pm).unwrap();
            assert!(all.iter().any(|r| r.is_identity()));
            for r in &all {
                assert!(r.is_pm_congruence(&s));
            }
        }
    }

    #[test]
    fn congruence_enumeration_matches_a_naive_partition_filter() {
        // Independent oracle: generate partitions by brute force over block
        // assignments (not restricted growth strings) and filter directly.
        let s = instances::chain_semilattice(3);
        let n = s.order();
        let mut naive = 0usize;
        let mut assignment = vec![0usize; n];
        loop {
            // Count canonical labellings only: first occurrence order.
            let mut map = vec![usize::MAX; n];
            let mut next = 0;
            let mut canonical = true;
            for i in 0..n {
                if map[assignment[i]] == usize::MAX {
                    map[assignment[i]] = next;
                    next += 1;
                }
                if map[assignment[i]] != assignment[i] {
                    canonical = false;
                    break;
                }
            }
            if canonical {
                let related = |a: usize, b: usize| assignment[a] == assignment[b];
                let compatible = (0..n).all(|a| {
                    (0..n).all(|b| {
                        !related(a, b)
                            || (0..n).all(|x| {
                                related(s.mul(a, x), s.mul(b, x))
                                    && related(s.mul(x, a), s.mul(x, b))
                                    && related(s.plus_of(a), s.plus_of(b))
                                    && related(s.minus_of(a), s.minus_of(b))
                            })
                    })
                });
                if compatible {
                    naive += 1;
                }
            }
            // Advance the odometer.
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                assignment[i] += 1;
                if assignment[i] < n {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        let fast = congruences(&s, CongruenceTag::Pm).unwrap().len();
        assert_eq!(fast, naive);
        // Frozen via the oracle: the interval partitions 0|1|2, 01|2, 0|12
        // and 012 are the congruences of the 3-chain; 02|1 fails.
        assert_eq!(fast, 4);
    }

    #[test]
    fn congruence_enumeration_respects_the_order_bound() {
        let s = instances::left_zero_band(3);
        assert!(matches!(
            congruences_bounded(&s, CongruenceTag::Semigroup, 2),
            Err(Error::OrderTooLarge { order: 3, max: 2 })
        ));
    }
}
