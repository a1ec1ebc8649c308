//! The two constructions between localisable semigroups and transcription
//! categories, their round-trip identity, and morphism checking.
//!
//! `pseudoproduct_semigroup` totalises a category's composition via
//! `x ⊗ y = (x|_{y⁺}) ∘ (_{x⁻}|y)`; `trace_category` restricts a semigroup's
//! multiplication to the pairs with `x⁻ = y⁺`. On the same carrier the two
//! are mutually inverse, cell for cell, which `roundtrip_*` re-checks
//! table-literally.

use crate::axioms::{self};
use crate::category::{CategoryTables, TranscriptionCategory};
use crate::semigroup::FiniteUnarySemigroup;
use crate::{Error, UnaryOp};

impl TranscriptionCategory {
    /// The pseudoproduct `x ⊗ y = (x|_{y⁺}) ∘ (_{x⁻}|y)`.
    pub fn pseudoproduct(&self, x: usize, y: usize) -> usize {
        let left = self.rtr(self.plus_of(y), x);
        let right = self.ltr(self.minus_of(x), y);
        self.comp(left, right)
            .expect("the pseudoproduct factors always compose")
    }
}

/// The semigroup `(C, ⊗)` on the same carrier, with `+` and `-` inherited.
///
/// The output is re-validated against the localisable axioms; a violation
/// would contradict the construction and panics.
pub fn pseudoproduct_semigroup(c: &TranscriptionCategory) -> FiniteUnarySemigroup {
    let n = c.order();
    let mut mul = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = c.pseudoproduct(x, y);
        }
    }
    let s = FiniteUnarySemigroup::new(
        c.names().to_vec(),
        mul,
        Some(c.tables().plus.clone()),
        Some(c.tables().minus.clone()),
        None,
    )
    .expect("the pseudoproduct is associative");
    if let Some((axiom, witness)) =
        axioms::first_failure(&s, axioms::LOCALISABLE).expect("maps are present")
    {
        panic!("pseudoproduct semigroup violates {axiom} at {witness:?}");
    }
    s
}

/// The trace category `𝒞(S)`: composition `x ∘ y = x·y` exactly when
/// `x⁻ = y⁺`, with transcription maps `ₑ|x = e·x` and `x|_f = x·f`.
///
/// Fails with the first violated axiom when `S` is not localisable; the left
/// axioms are checked before the `-` map is required, so one-sided
/// structures are rejected with a meaningful witness.
pub fn trace_category(s: &FiniteUnarySemigroup) -> Result<TranscriptionCategory, Error> {
    match axioms::first_failure(s, axioms::LOCALISABLE) {
        Ok(None) => {}
        Ok(Some((axiom, witness))) => return Err(Error::NotLocalisable { axiom, witness }),
        Err(e) => return Err(e),
    }
    let n = s.order();
    let plus = s.unary(UnaryOp::Plus).unwrap().to_vec();
    let minus = s.unary(UnaryOp::Minus).unwrap().to_vec();
    let mut comp = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            if minus[x] == plus[y] {
                comp[x * n + y] = Some(s.mul(x, y));
            }
        }
    }
    let objects: Vec<usize> = (0..n).filter(|&e| plus[e] == e).collect();
    {
        let mut image = s.projections()?;
        image.sort_unstable();
        assert_eq!(objects, image, "objects of 𝒞(S) are exactly S⁺");
    }
    let k = objects.len();
    let mut ltr = vec![0; k * n];
    let mut rtr = vec![0; k * n];
    for (i, &e) in objects.iter().enumerate() {
        for x in 0..n {
            ltr[i * n + x] = s.mul(e, x);
            rtr[i * n + x] = s.mul(x, e);
        }
    }
    let tables = CategoryTables {
        names: s.names().to_vec(),
        plus,
        minus,
        comp,
        ltr,
        rtr,
    };
    Ok(TranscriptionCategory::validate(tables)
        .expect("the trace construction satisfies the category axioms"))
}

/// A single mismatched cell in a table comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub table: &'static str,
    pub index: Vec<usize>,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// Outcome of a round-trip comparison; empty means literal table equality.
#[derive(Debug, Clone, Default)]
pub struct RoundtripReport {
    pub diffs: Vec<CellDiff>,
}

impl RoundtripReport {
    pub fn tables_identical(&self) -> bool {
        self.diffs.is_empty()
    }
}

fn diff_unary(
    diffs: &mut Vec<CellDiff>,
    table: &'static str,
    left: &[usize],
    right: &[usize],
) {
    for (x, (&l, &r)) in left.iter().zip(right).enumerate() {
        if l != r {
            diffs.push(CellDiff {
                table,
                index: vec![x],
                left: Some(l),
                right: Some(r),
            });
        }
    }
}

/// Compares `S` with `𝒮(𝒞(S))` cell for cell (the `·`, `+`, `-` tables).
pub fn roundtrip_semigroup(s: &FiniteUnarySemigroup) -> Result<RoundtripReport, Error> {
    let c = trace_category(s)?;
    let back = pseudoproduct_semigroup(&c);
    let n = s.order();
    let mut diffs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if s.mul(x, y) != back.mul(x, y) {
                diffs.push(CellDiff {
                    table: "mul",
                    index: vec![x, y],
                    left: Some(s.mul(x, y)),
                    right: Some(back.mul(x, y)),
                });
            }
        }
    }
    diff_unary(
        &mut diffs,
        "plus",
        s.unary(UnaryOp::Plus).unwrap(),
        back.unary(UnaryOp::Plus).unwrap(),
    );
    diff_unary(
        &mut diffs,
        "minus",
        s.unary(UnaryOp::Minus).unwrap(),
        back.unary(UnaryOp::Minus).unwrap(),
    );
    Ok(RoundtripReport { diffs })
}

/// Compares `C` with `𝒞(𝒮(C))` cell for cell (`comp`, `+`, `-`, `ltr`, `rtr`).
pub fn roundtrip_category(c: &TranscriptionCategory) -> RoundtripReport {
    let s = pseudoproduct_semigroup(c);
    let back = trace_category(&s).expect("a pseudoproduct semigroup is localisable");
    let n = c.order();
    let mut diffs = Vec::new();
    diff_unary(&mut diffs, "plus", &c.tables().plus, &back.tables().plus);
    diff_unary(&mut diffs, "minus", &c.tables().minus, &back.tables().minus);
    for x in 0..n {
        for y in 0..n {
            if c.comp(x, y) != back.comp(x, y) {
                diffs.push(CellDiff {
                    table: "comp",
                    index: vec![x, y],
                    left: c.comp(x, y),
                    right: back.comp(x, y),
                });
            }
        }
    }
    for &e in c.objects() {
        for x in 0..n {
            if c.ltr(e, x) != back.ltr(e, x) {
                diffs.push(CellDiff {
                    table: "ltr",
                    index: vec![e, x],
                    left: Some(c.ltr(e, x)),
                    right: Some(back.ltr(e, x)),
                });
            }
            if c.rtr(e, x) != back.rtr(e, x) {
                diffs.push(CellDiff {
                    table: "rtr",
                    index: vec![e, x],
                    left: Some(c.rtr(e, x)),
                    right: Some(back.rtr(e, x)),
                });
            }
        }
    }
    RoundtripReport { diffs }
}

/// Which morphism law failed, with the offending tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismViolation {
    pub law: MorphismLaw,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismLaw {
    Multiplication,
    PlusPreserved,
    MinusPreserved,
    Composition,
    LeftTranscription,
    RightTranscription,
}

fn check_map_shape(src_order: usize, dst_order: usize, map: &[usize]) {
    assert_eq!(map.len(), src_order, "morphism map must be total");
    assert!(
        map.iter().all(|&v| v < dst_order),
        "morphism map must land in the target"
    );
}

/// Verifies `(x·y)φ = xφ·yφ`, `(x⁺)φ = (xφ)⁺` and `(x⁻)φ = (xφ)⁻`.
///
/// Both structures are expected to be localisable.
pub fn check_pm_morphism(
    src: &FiniteUnarySemigroup,
    dst: &FiniteUnarySemigroup,
    map: &[usize],
) -> Result<(), MorphismViolation> {
    check_map_shape(src.order(), dst.order(), map);
    debug_assert!(axioms::satisfies(src, axioms::LOCALISABLE));
    debug_assert!(axioms::satisfies(dst, axioms::LOCALISABLE));
    let n = src.order();
    for x in 0..n {
        for y in 0..n {
            if map[src.mul(x, y)] != dst.mul(map[x], map[y]) {
                return Err(MorphismViolation {
                    law: MorphismLaw::Multiplication,
                    witness: vec![x, y],
                });
            }
        }
    }
    for x in 0..n {
        if map[src.plus_of(x)] != dst.plus_of(map[x]) {
            return Err(MorphismViolation {
                law: MorphismLaw::PlusPreserved,
                witness: vec![x],
            });
        }
        if map[src.minus_of(x)] != dst.minus_of(map[x]) {
            return Err(MorphismViolation {
                law: MorphismLaw::MinusPreserved,
                witness: vec![x],
            });
        }
    }
    Ok(())
}

/// Verifies functoriality on defined compositions plus preservation of `+`,
/// `-` and both transcription tables.
pub fn check_functor(
    src: &TranscriptionCategory,
    dst: &TranscriptionCategory,
    map: &[usize],
) -> Result<(), MorphismViolation> {
    check_map_shape(src.order(), dst.order(), map);
    let n = src.order();
    for x in 0..n {
        if map[src.plus_of(x)] != dst.plus_of(map[x]) {
            return Err(MorphismViolation {
                law: MorphismLaw::PlusPreserved,
                witness: vec![x],
            });
        }
        if map[src.minus_of(x)] != dst.minus_of(map[x]) {
            return Err(MorphismViolation {
                law: MorphismLaw::MinusPreserved,
                witness: vec![x],
            });
        }
    }
    // With signs preserved, xφ ∘ yφ is defined whenever x ∘ y is, and images
    // of objects are objects.
    for x in 0..n {
        for y in 0..n {
            if let Some(xy) = src.comp(x, y) {
                if dst.comp(map[x], map[y]) != Some(map[xy]) {
                    return Err(MorphismViolation {
                        law: MorphismLaw::Composition,
                        witness: vec![x, y],
                    });
                }
            }
        }
    }
    for &e in src.objects() {
        for x in 0..n {
            if map[src.ltr(e, x)] != dst.ltr(map[e], map[x]) {
                return Err(MorphismViolation {
                    law: MorphismLaw::LeftTranscription,
                    witness: vec![e, x],
                });
            }
            if map[src.rtr(e, x)] != dst.rtr(map[e], map[x]) {
                return Err(MorphismViolation {
                    law: MorphismLaw::RightTranscription,
                    witness: vec![e, x],
                });
            }
        }
    }
    Ok(())
}

/// An element map between two semigroups, stored with owned copies of its
/// endpoints.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    pub source: FiniteUnarySemigroup,
    pub target: FiniteUnarySemigroup,
    pub map: Vec<usize>,
}

impl AlgebraMorphism {
    pub fn new(
        source: FiniteUnarySemigroup,
        target: FiniteUnarySemigroup,
        map: Vec<usize>,
    ) -> Result<Self, Error> {
        if map.len() != source.order() {
            return Err(Error::SizeMismatch {
                table: "map",
                expected: source.order(),
                got: map.len(),
            });
        }
        for (index, &value) in map.iter().enumerate() {
            if value >= target.order() {
                return Err(Error::IndexOutOfRange {
                    table: "map",
                    index,
                    value,
                    order: target.order(),
                });
            }
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn check_pm_morphism(&self) -> Result<(), MorphismViolation> {
        check_pm_morphism(&self.source, &self.target, &self.map)
    }
}
