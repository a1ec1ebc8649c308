//! Actions of a localisable semigroup on its projections and the resulting
//! transformation representations.
//!
//! Composition conventions: images under `δ` compose left to right,
//! `(p)(st)δ = ((p)sδ)tδ`, while `γ` composes right to left,
//! `γ(st)(p) = γs(γt(p))`. Both are asserted when the representations are
//! built, so a silent anti-homomorphism cannot slip through.

use crate::axioms::{self};
use crate::functor::AlgebraMorphism;
use crate::relations::{mu_relation, BinaryRelation, RelationKind};
use crate::semigroup::FiniteUnarySemigroup;
use crate::Error;

/// Which side of the semigroup acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSide {
    Left,
    Right,
}

/// A total map on the projection set, stored as indices into `domain`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationMap {
    pub side: ActionSide,
    /// The projections, in element order.
    pub domain: Vec<usize>,
    /// `images[i]` is the domain index of the image of `domain[i]`.
    pub images: Vec<usize>,
}

impl TransformationMap {
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &TransformationMap) -> TransformationMap {
        TransformationMap {
            side: self.side,
            domain: self.domain.clone(),
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }
}

fn require_localisable(s: &FiniteUnarySemigroup) -> Result<Vec<usize>, Error> {
    match axioms::first_failure(s, axioms::LOCALISABLE)? {
        None => s.projections(),
        Some((axiom, witness)) => Err(Error::NotLocalisable { axiom, witness }),
    }
}

fn position(projections: &[usize], p: usize) -> usize {
    projections
        .iter()
        .position(|&q| q == p)
        .expect("value must be a projection")
}

/// The right representation `δ`: `(p)sδ = (ps)⁻`, one map per element.
///
/// Asserts `(st)δ = sδ` followed by `tδ`, and that projections act as inner
/// right translations.
pub fn delta(s: &FiniteUnarySemigroup) -> Result<Vec<TransformationMap>, Error> {
    let projections = require_localisable(s)?;
    let n = s.order();
    let maps: Vec<TransformationMap> = (0..n)
        .map(|el| TransformationMap {
            side: ActionSide::Right,
            domain: projections.clone(),
            images: projections
                .iter()
                .map(|&p| position(&projections, s.minus_of(s.mul(p, el))))
                .collect(),
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                maps[s.mul(a, b)],
                maps[a].then(&maps[b]),
                "δ must be a homomorphism"
            );
        }
    }
    for x in 0..n {
        for sign in [s.plus_of(x), s.minus_of(x)] {
            let inner: Vec<usize> = projections
                .iter()
                .map(|&p| position(&projections, s.mul(p, sign)))
                .collect();
            assert_eq!(maps[sign].images, inner, "s±δ must be ρ_(s±)");
        }
    }
    Ok(maps)
}

/// The left representation `γ`: `γs(p) = (sp)⁺`.
///
/// Asserts `γ(st) = γs ∘ γt` (apply `γt` first) and that projections act as
/// inner left translations.
pub fn gamma(s: &FiniteUnarySemigroup) -> Result<Vec<TransformationMap>, Error> {
    let projections = require_localisable(s)?;
    let n = s.order();
    let maps: Vec<TransformationMap> = (0..n)
        .map(|el| TransformationMap {
            side: ActionSide::Left,
            domain: projections.clone(),
            images: projections
                .iter()
                .map(|&p| position(&projections, s.plus_of(s.mul(el, p))))
                .collect(),
        })
        .collect();
    for a in 0..n {
        for b in 0..n {
            assert_eq!(
                maps[s.mul(a, b)],
                maps[b].then(&maps[a]),
                "γ must compose right to left"
            );
        }
    }
    for x in 0..n {
        for sign in [s.plus_of(x), s.minus_of(x)] {
            let inner: Vec<usize> = projections
                .iter()
                .map(|&p| position(&projections, s.mul(sign, p)))
                .collect();
            assert_eq!(maps[sign].images, inner, "γs± must be λ_(s±)");
        }
    }
    Ok(maps)
}

/// The embedding of the projection band into linked pairs of inner
/// translations.
#[derive(Debug, Clone)]
pub struct OmegaEmbedding {
    /// `S⁺` with the induced multiplication and identity unary maps.
    pub band: FiniteUnarySemigroup,
    /// `λ_p` for each projection, in band order.
    pub left: Vec<TransformationMap>,
    /// `ρ_p` for each projection, in band order.
    pub right: Vec<TransformationMap>,
    /// `p ↦ (λ_p, ρ_p)`, an isomorphism onto the band of linked pairs.
    pub morphism: AlgebraMorphism,
}

/// Builds `p ↦ (λ_p, ρ_p)`, asserting injectivity and multiplicativity.
pub fn omega_embedding(s: &FiniteUnarySemigroup) -> Result<OmegaEmbedding, Error> {
    let projections = require_localisable(s)?;
    let k = projections.len();
    let names: Vec<String> = projections.iter().map(|&p| s.name(p).to_string()).collect();
    let mut band_mul = vec![0; k * k];
    for (i, &p) in projections.iter().enumerate() {
        for (j, &q) in projections.iter().enumerate() {
            band_mul[i * k + j] = position(&projections, s.mul(p, q));
        }
    }
    let id: Vec<usize> = (0..k).collect();
    let band = FiniteUnarySemigroup::new(
        names,
        band_mul,
        Some(id.clone()),
        Some(id.clone()),
        None,
    )
    .expect("the projection band is associative");

    let translation = |p: usize, side: ActionSide| TransformationMap {
        side,
        domain: projections.clone(),
        images: projections
            .iter()
            .map(|&q| {
                let image = match side {
                    ActionSide::Left => s.mul(p, q),
                    ActionSide::Right => s.mul(q, p),
                };
                position(&projections, image)
            })
            .collect(),
    };
    let left: Vec<TransformationMap> = projections
        .iter()
        .map(|&p| translation(p, ActionSide::Left))
        .collect();
    let right: Vec<TransformationMap> = projections
        .iter()
        .map(|&p| translation(p, ActionSide::Right))
        .collect();

    let pairs: Vec<(&TransformationMap, &TransformationMap)> =
        left.iter().zip(right.iter()).collect();
    for i in 0..k {
        for j in 0..k {
            if i != j {
                assert_ne!(pairs[i], pairs[j], "p ↦ (λ_p, ρ_p) must be injective");
            }
        }
    }
    // Multiplicativity: (λ_p ∘ λ_q, ρ_q ∘ ρ_p) is the pair of the product.
    for i in 0..k {
        for j in 0..k {
            let composed = (left[j].then(&left[i]), right[i].then(&right[j]));
            let product = band.mul(i, j);
            assert_eq!(
                (composed.0.images.clone(), composed.1.images.clone()),
                (left[product].images.clone(), right[product].images.clone()),
                "the linked pairs must multiply like the projections"
            );
        }
    }
    let morphism = AlgebraMorphism::new(band.clone(), band.clone(), (0..k).collect())?;
    Ok(OmegaEmbedding {
        band,
        left,
        right,
        morphism,
    })
}

/// The joint kernel of `γ` and `δ`: pairs acting identically on both sides.
///
/// Refining it by equal signs recovers exactly `μ`; this is asserted.
pub fn kernel_of_gamma_delta(s: &FiniteUnarySemigroup) -> Result<BinaryRelation, Error> {
    let gammas = gamma(s)?;
    let deltas = delta(s)?;
    let n = s.order();
    let kernel = BinaryRelation::from_fn(n, RelationKind::Equivalence, None, |a, b| {
        gammas[a] == gammas[b] && deltas[a] == deltas[b]
    });
    let refined = BinaryRelation::from_fn(n, RelationKind::Equivalence, None, |a, b| {
        kernel.contains(a, b) && s.plus_of(a) == s.plus_of(b) && s.minus_of(a) == s.minus_of(b)
    });
    assert_eq!(
        refined,
        mu_relation(s)?,
        "the sign-refined kernel must equal μ"
    );
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::UnaryOp;

    #[test]
    fn delta_on_a_band_is_right_translation() {
        // (ps)⁻ = ps in a band with identity unary maps.
        let band = instances::rectangular_band(2, 2);
        let maps = delta(&band).unwrap();
        let projections = band.projections().unwrap();
        for el in 0..band.order() {
            for (i, &p) in projections.iter().enumerate() {
                let expected = band.mul(p, el);
                assert_eq!(projections[maps[el].apply(i)], expected);
            }
        }
    }

    #[test]
    fn gamma_on_a_band_is_left_translation() {
        let band = instances::rectangular_band(2, 2);
        let maps = gamma(&band).unwrap();
        let projections = band.projections().unwrap();
        for el in 0..band.order() {
            for (i, &p) in projections.iter().enumerate() {
                assert_eq!(projections[maps[el].apply(i)], band.mul(el, p));
            }
        }
    }

    #[test]
    fn reduced_monoids_act_trivially() {
        let m = instances::reduced(&instances::cyclic_group(3).without_unary(UnaryOp::Star))
            .unwrap();
        for map in delta(&m).unwrap().iter().chain(gamma(&m).unwrap().iter()) {
            assert_eq!(map.domain, vec![0]);
            assert_eq!(map.images, vec![0]);
        }
    }

    #[test]
    fn omega_embedding_distinguishes_left_zero_projections() {
        // λ_p(q) = pq = p separates the two projections.
        let lz = instances::left_zero_band(2);
        let omega = omega_embedding(&lz).unwrap();
        assert_ne!(omega.left[0].images, omega.left[1].images);
        assert!(omega.morphism.check_pm_morphism().is_ok());
    }

    #[test]
    fn omega_embedding_is_trivial_with_one_projection() {
        let m = instances::reduced(&instances::chain_semilattice(2)).unwrap();
        let omega = omega_embedding(&m).unwrap();
        assert_eq!(omega.band.order(), 1);
    }

    #[test]
    fn kernel_is_identity_on_bands_and_universal_on_reduced_monoids() {
        let band = instances::left_zero_band(3);
        assert!(kernel_of_gamma_delta(&band).unwrap().is_identity());

        let m = instances::reduced(&instances::cyclic_group(3).without_unary(UnaryOp::Star))
            .unwrap();
        let kernel = kernel_of_gamma_delta(&m).unwrap();
        // With a single projection both actions collapse.
        assert_eq!(kernel, BinaryRelation::universal(3));
    }
}
