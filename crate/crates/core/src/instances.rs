//! Small ready-made structures used in tests, docs and the bundled corpus.
//!
//! Bands come equipped with the canonical unary maps `x⁺ = x⁻ = x`; groups
//! carry `x⁺ = x⁻ = 1` and `x∗ = x⁻¹`.

use crate::semigroup::FiniteUnarySemigroup;
use crate::{Error, UnaryOp};

fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// The one-element structure, with all three unary maps present.
pub fn trivial() -> FiniteUnarySemigroup {
    FiniteUnarySemigroup::new(
        vec!["a".into()],
        vec![0],
        Some(vec![0]),
        Some(vec![0]),
        Some(vec![0]),
    )
    .unwrap()
}

/// `x · y = x`, with identity unary maps.
pub fn left_zero_band(n: usize) -> FiniteUnarySemigroup {
    let mul = (0..n).flat_map(|x| std::iter::repeat(x).take(n)).collect();
    let id: Vec<usize> = (0..n).collect();
    FiniteUnarySemigroup::new(letters(n), mul, Some(id.clone()), Some(id), None).unwrap()
}

/// `x · y = y`, with identity unary maps.
pub fn right_zero_band(n: usize) -> FiniteUnarySemigroup {
    let mul = (0..n).flat_map(|_| 0..n).collect();
    let id: Vec<usize> = (0..n).collect();
    FiniteUnarySemigroup::new(letters(n), mul, Some(id.clone()), Some(id), None).unwrap()
}

/// The chain semilattice `0 < 1 < … < n-1` under minimum, named `0..n`,
/// with identity unary maps.
pub fn chain_semilattice(n: usize) -> FiniteUnarySemigroup {
    let names = (0..n).map(|i| i.to_string()).collect();
    let mul = (0..n).flat_map(|x| (0..n).map(move |y| x.min(y))).collect();
    let id: Vec<usize> = (0..n).collect();
    FiniteUnarySemigroup::new(names, mul, Some(id.clone()), Some(id), None).unwrap()
}

/// The `r × c` rectangular band `(i,j)·(k,l) = (i,l)`, with identity unary
/// maps.
pub fn rectangular_band(r: usize, c: usize) -> FiniteUnarySemigroup {
    let n = r * c;
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = (x / c) * c + (y % c);
        }
    }
    let id: Vec<usize> = (0..n).collect();
    FiniteUnarySemigroup::new(letters(n), mul, Some(id.clone()), Some(id), None).unwrap()
}

/// The cyclic group of order `n` with `x⁺ = x⁻ = 1` and `x∗ = x⁻¹`.
pub fn cyclic_group(n: usize) -> FiniteUnarySemigroup {
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let mul = (0..n).flat_map(|x| (0..n).map(move |y| (x + y) % n)).collect();
    let inv = (0..n).map(|x| (n - x) % n).collect();
    FiniteUnarySemigroup::new(names, mul, Some(vec![0; n]), Some(vec![0; n]), Some(inv)).unwrap()
}

/// Installs `x∗ = x` on a band.
pub fn with_identity_star(s: &FiniteUnarySemigroup) -> Result<FiniteUnarySemigroup, Error> {
    if let Some(x) = (0..s.order()).find(|&x| s.mul(x, x) != x) {
        return Err(Error::NotIdempotent(x));
    }
    s.with_unary(UnaryOp::Star, (0..s.order()).collect())
}

/// Installs `x⁺ = x⁻ = 1` on a monoid, making it a reduced structure.
pub fn reduced(s: &FiniteUnarySemigroup) -> Result<FiniteUnarySemigroup, Error> {
    let one = s.identity().ok_or(Error::NotAProjection(0))?;
    let n = s.order();
    s.with_unary(UnaryOp::Plus, vec![one; n])?
        .with_unary(UnaryOp::Minus, vec![one; n])
}

/// Adjoins a new two-sided identity mapped to itself by every present unary
/// map.
pub fn adjoin_identity(s: &FiniteUnarySemigroup) -> FiniteUnarySemigroup {
    let n = s.order();
    let mut names: Vec<String> = s.names().to_vec();
    let mut one = "1".to_string();
    while names.contains(&one) {
        one.push('\'');
    }
    names.push(one);
    let m = n + 1;
    let mut mul = vec![0; m * m];
    for x in 0..n {
        for y in 0..n {
            mul[x * m + y] = s.mul(x, y);
        }
    }
    for x in 0..m {
        mul[x * m + n] = x;
        mul[n * m + x] = x;
    }
    let extend = |map: Option<&[usize]>| {
        map.map(|map| {
            let mut out = map.to_vec();
            out.push(n);
            out
        })
    };
    FiniteUnarySemigroup::new(
        names,
        mul,
        extend(s.unary(UnaryOp::Plus)),
        extend(s.unary(UnaryOp::Minus)),
        extend(s.unary(UnaryOp::Star)),
    )
    .unwrap()
}

/// The four-element semigroup generated by idempotents `e`, `f` with
/// `fe = 0`, writing `a = ef`, carrying the projection assignment
/// `e⁺ = a⁺ = e`, `f⁺ = f`, `0⁺ = 0`.
///
/// Every element is `~R̃`-related to its projection, so the structure is
/// weakly left `E`-abundant for `E = {e, f, 0}`, yet `4.1c` fails at `(e, f)`
/// because `ef = a` is not a projection.
pub fn weakly_abundant_not_left_localisable() -> FiniteUnarySemigroup {
    let names = vec!["e".into(), "f".into(), "a".into(), "0".into()];
    #[rustfmt::skip]
    let mul = vec![
        0, 2, 2, 3,
        3, 1, 3, 3,
        3, 2, 3, 3,
        3, 3, 3, 3,
    ];
    FiniteUnarySemigroup::new(names, mul, Some(vec![0, 1, 0, 3]), None, None).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{self, AxiomId};

    #[test]
    fn generators_produce_what_they_claim() {
        assert!(left_zero_band(3).is_band());
        assert!(right_zero_band(3).is_band());
        assert!(chain_semilattice(3).is_band());
        assert!(chain_semilattice(3).is_commutative());
        assert!(rectangular_band(2, 3).is_band());
        assert_eq!(cyclic_group(5).identity(), Some(0));
        assert!(axioms::satisfies(&cyclic_group(4), axioms::LOCALISABLE));
        assert!(axioms::satisfies(
            &cyclic_group(4),
            axioms::STAR_LOCALISABLE
        ));
    }

    #[test]
    fn adjoined_identity_keeps_localisability() {
        let s = adjoin_identity(&left_zero_band(2));
        assert_eq!(s.identity(), Some(2));
        assert!(axioms::satisfies(&s, axioms::LOCALISABLE));
        // Two projections survive plus the new one.
        assert_eq!(s.projections().unwrap().len(), 3);
    }

    #[test]
    fn fixture_is_idempotent_generated_with_zero() {
        let s = weakly_abundant_not_left_localisable();
        assert_eq!(s.idempotents(), vec![0, 1, 3]);
        assert_eq!(s.mul(1, 0), 3, "fe = 0");
        assert_eq!(s.mul(0, 1), 2, "ef = a");
        assert!(!axioms::check_axiom(&s, AxiomId::Loc_c).unwrap().holds);
    }
}
