//! Finite transcription categories: a partial composition table together
//! with two object-indexed transcription tables.

use crate::axioms::{AxiomId, AxiomReport};
use crate::semigroup::FiniteUnarySemigroup;
use crate::Error;

/// Raw tables for a candidate transcription category, before validation.
///
/// `comp` is the partial composition stored as a full table with `None` as
/// the undefined sentinel; its definedness is re-derived from `plus`/`minus`
/// and cross-checked, so inconsistent input files are detected. `ltr` and
/// `rtr` hold the transcription maps on object rows only (`|C⁺| × n`), with
/// object rows in element order restricted to the object set: row `i` of
/// `ltr` is `x ↦ ₑ|x` for the `i`-th object `e`, row `i` of `rtr` is
/// `x ↦ x|_f` for the `i`-th object `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryTables {
    pub names: Vec<String>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub comp: Vec<Option<usize>>,
    pub ltr: Vec<usize>,
    pub rtr: Vec<usize>,
}

impl CategoryTables {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Elements fixed by `+`, in element order.
    pub fn objects(&self) -> Vec<usize> {
        (0..self.order()).filter(|&e| self.plus[e] == e).collect()
    }
}

fn check_shape(t: &CategoryTables) -> Result<(), Error> {
    let n = t.names.len();
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    for (i, name) in t.names.iter().enumerate() {
        if t.names[..i].iter().any(|m| m == name) {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    let ranged = |table: &'static str, map: &[usize], expected: usize| -> Result<(), Error> {
        if map.len() != expected {
            return Err(Error::SizeMismatch {
                table,
                expected,
                got: map.len(),
            });
        }
        for (index, &value) in map.iter().enumerate() {
            if value >= n {
                return Err(Error::IndexOutOfRange {
                    table,
                    index,
                    value,
                    order: n,
                });
            }
        }
        Ok(())
    };
    ranged("plus", &t.plus, n)?;
    ranged("minus", &t.minus, n)?;
    if t.comp.len() != n * n {
        return Err(Error::SizeMismatch {
            table: "comp",
            expected: n * n,
            got: t.comp.len(),
        });
    }
    for (index, cell) in t.comp.iter().enumerate() {
        if let Some(value) = *cell {
            if value >= n {
                return Err(Error::IndexOutOfRange {
                    table: "comp",
                    index,
                    value,
                    order: n,
                });
            }
        }
    }
    let k = t.objects().len();
    ranged("ltr", &t.ltr, k * n)?;
    ranged("rtr", &t.rtr, k * n)?;
    Ok(())
}

/// Guarded table access used by the validators; `None` marks an access that
/// is not well-formed on the raw tables (a non-object used as a row).
struct Ctx<'a> {
    t: &'a CategoryTables,
    n: usize,
    row: Vec<Option<usize>>,
}

impl<'a> Ctx<'a> {
    fn new(t: &'a CategoryTables) -> Self {
        let n = t.order();
        let mut row = vec![None; n];
        for (i, e) in t.objects().into_iter().enumerate() {
            row[e] = Some(i);
        }
        Ctx { t, n, row }
    }

    fn objects(&self) -> Vec<usize> {
        self.t.objects()
    }

    fn comp(&self, x: usize, y: usize) -> Option<usize> {
        self.t.comp[x * self.n + y]
    }

    fn ltr(&self, e: usize, x: usize) -> Option<usize> {
        self.row[e].map(|r| self.t.ltr[r * self.n + x])
    }

    fn rtr(&self, f: usize, x: usize) -> Option<usize> {
        self.row[f].map(|r| self.t.rtr[r * self.n + x])
    }
}

fn report(axiom: AxiomId, witness: Option<Vec<usize>>) -> AxiomReport {
    AxiomReport {
        axiom,
        holds: witness.is_none(),
        witness,
    }
}

fn domain_witness(c: &Ctx) -> Option<(usize, usize, bool)> {
    for x in 0..c.n {
        for y in 0..c.n {
            let should = c.t.minus[x] == c.t.plus[y];
            let defined = c.comp(x, y).is_some();
            if should != defined {
                return Some((x, y, defined));
            }
        }
    }
    None
}

/// Reports for the category axioms `2.1a`–`2.1e` on raw tables.
pub fn category_reports(t: &CategoryTables) -> Result<Vec<AxiomReport>, Error> {
    check_shape(t)?;
    let c = Ctx::new(t);
    let n = c.n;
    let mut out = Vec::new();

    // 2.1a: x⁺ ∘ x = x = x ∘ x⁻.
    let w = (0..n).find(|&x| {
        c.comp(t.plus[x], x) != Some(x) || c.comp(x, t.minus[x]) != Some(x)
    });
    out.push(report(AxiomId::Cat_a, w.map(|x| vec![x])));

    // 2.1b: (x⁺)⁻ = x⁺ and (x⁻)⁺ = x⁻.
    let w = (0..n).find(|&x| t.minus[t.plus[x]] != t.plus[x] || t.plus[t.minus[x]] != t.minus[x]);
    out.push(report(AxiomId::Cat_b, w.map(|x| vec![x])));

    // 2.1c: x ∘ y is defined precisely when x⁻ = y⁺.
    out.push(report(
        AxiomId::Cat_c,
        domain_witness(&c).map(|(x, y, _)| vec![x, y]),
    ));

    // 2.1d: (x∘y)⁺ = x⁺ and (x∘y)⁻ = y⁻ on defined pairs.
    let mut w = None;
    'd: for x in 0..n {
        for y in 0..n {
            if let Some(xy) = c.comp(x, y) {
                if t.plus[xy] != t.plus[x] || t.minus[xy] != t.minus[y] {
                    w = Some(vec![x, y]);
                    break 'd;
                }
            }
        }
    }
    out.push(report(AxiomId::Cat_d, w));

    // 2.1e: associativity where defined.
    let mut w = None;
    'e: for x in 0..n {
        for y in 0..n {
            let Some(xy) = c.comp(x, y) else { continue };
            for z in 0..n {
                let Some(yz) = c.comp(y, z) else { continue };
                if c.comp(xy, z).is_none() || c.comp(xy, z) != c.comp(x, yz) {
                    w = Some(vec![x, y, z]);
                    break 'e;
                }
            }
        }
    }
    out.push(report(AxiomId::Cat_e, w));
    Ok(out)
}

fn first_category_failure(t: &CategoryTables) -> Result<(), Error> {
    check_shape(t)?;
    let c = Ctx::new(t);
    if let Some((x, y, defined)) = domain_witness(&c) {
        return Err(Error::DomainMismatch { x, y, defined });
    }
    for r in category_reports(t)? {
        if !r.holds {
            return Err(Error::AxiomViolation {
                axiom: r.axiom,
                witness: r.witness.unwrap(),
            });
        }
    }
    Ok(())
}

/// Reports for the transcription axioms `3.1a`–`3.1f` plus the derived
/// identity `3.2`, on tables that already satisfy the category axioms.
pub fn transcription_reports(t: &CategoryTables) -> Result<Vec<AxiomReport>, Error> {
    first_category_failure(t)?;
    let c = Ctx::new(t);
    let n = c.n;
    let objects = c.objects();
    let mut out = Vec::new();

    // 3.1a: ₑ|f = e|_f on object pairs.
    let mut w = None;
    'a: for &e in &objects {
        for &f in &objects {
            if c.ltr(e, f) != c.rtr(f, e) {
                w = Some(vec![e, f]);
                break 'a;
            }
        }
    }
    out.push(report(AxiomId::Tr_a, w));

    // 3.1b: ₓ₊|x = x = x|ₓ₋.
    let w = (0..n).find(|&x| c.ltr(t.plus[x], x) != Some(x) || c.rtr(t.minus[x], x) != Some(x));
    out.push(report(AxiomId::Tr_b, w.map(|x| vec![x])));

    // 3.1c: ₑ|(_f|x) = _(ₑ|f)|x and its dual.
    let mut w = None;
    'c: for &e in &objects {
        for &f in &objects {
            for x in 0..n {
                let left = c.ltr(f, x).and_then(|fx| c.ltr(e, fx));
                let right = c.ltr(e, f).and_then(|ef| c.ltr(ef, x));
                let dleft = c.rtr(f, e).and_then(|ef| c.rtr(ef, x));
                let dright = c.rtr(e, x).and_then(|xe| c.rtr(f, xe));
                if left.is_none() || left != right || dleft.is_none() || dleft != dright {
                    w = Some(vec![e, f, x]);
                    break 'c;
                }
            }
        }
    }
    out.push(report(AxiomId::Tr_c, w));

    // 3.1d: ₑ|(x∘y) = (ₑ|x) ∘ (_(ₑ|x)⁻|y) and its dual.
    let mut w = None;
    'd: for &o in &objects {
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = c.comp(x, y) else { continue };
                let left = c.ltr(o, xy);
                let right = c
                    .ltr(o, x)
                    .and_then(|ox| c.ltr(t.minus[ox], y).and_then(|oy| c.comp(ox, oy)));
                let dleft = c.rtr(o, xy);
                let dright = c
                    .rtr(o, y)
                    .and_then(|yo| c.rtr(t.plus[yo], x).and_then(|xo| c.comp(xo, yo)));
                if left.is_none() || left != right || dleft.is_none() || dleft != dright {
                    w = Some(vec![o, x, y]);
                    break 'd;
                }
            }
        }
    }
    out.push(report(AxiomId::Tr_d, w));

    // 3.1e: (ₑ|x)⁺ = ₑ|x⁺ and (x|_f)⁻ = x⁻|_f.
    let mut w = None;
    'e: for &o in &objects {
        for x in 0..n {
            let lhs = c.ltr(o, x).map(|ox| t.plus[ox]);
            let rhs = c.ltr(o, t.plus[x]);
            let dlhs = c.rtr(o, x).map(|xo| t.minus[xo]);
            let drhs = c.rtr(o, t.minus[x]);
            if lhs != rhs || dlhs != drhs {
                w = Some(vec![o, x]);
                break 'e;
            }
        }
    }
    out.push(report(AxiomId::Tr_e, w));

    // 3.1f: (ₑ|x)|_f = ₑ|(x|_f).
    let mut w = None;
    'f: for &e in &objects {
        for &f in &objects {
            for x in 0..n {
                let lhs = c.ltr(e, x).and_then(|ex| c.rtr(f, ex));
                let rhs = c.rtr(f, x).and_then(|xf| c.ltr(e, xf));
                if lhs.is_none() || lhs != rhs {
                    w = Some(vec![e, f, x]);
                    break 'f;
                }
            }
        }
    }
    out.push(report(AxiomId::Tr_f, w));

    // 3.2 (derived): (ₑ|x)⁻ = (ₑ|x)⁻|ₓ₋ and dually (x|_f)⁺ = ₓ₊|(x|_f)⁺.
    let mut w = None;
    't: for &o in &objects {
        for x in 0..n {
            let lhs = c.ltr(o, x).map(|ox| t.minus[ox]);
            if lhs != lhs.and_then(|m| c.rtr(t.minus[x], m)) {
                w = Some(vec![o, x]);
                break 't;
            }
            let dlhs = c.rtr(o, x).map(|xo| t.plus[xo]);
            if dlhs != dlhs.and_then(|p| c.ltr(t.plus[x], p)) {
                w = Some(vec![o, x]);
                break 't;
            }
        }
    }
    out.push(report(AxiomId::Tr_derived, w));
    Ok(out)
}

/// A validated transcription category.
///
/// Construction checks the category axioms (including consistency of the
/// undefined sentinel with `plus`/`minus`) and all transcription axioms, so
/// a value of this type satisfies every identity the crate relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptionCategory {
    tables: CategoryTables,
    objects: Vec<usize>,
    row: Vec<Option<usize>>,
}

impl TranscriptionCategory {
    pub fn validate(tables: CategoryTables) -> Result<Self, Error> {
        first_category_failure(&tables)?;
        for r in transcription_reports(&tables)? {
            if !r.holds {
                return Err(Error::AxiomViolation {
                    axiom: r.axiom,
                    witness: r.witness.unwrap(),
                });
            }
        }
        let objects = tables.objects();
        let mut row = vec![None; tables.order()];
        for (i, &e) in objects.iter().enumerate() {
            row[e] = Some(i);
        }
        Ok(Self {
            tables,
            objects,
            row,
        })
    }

    pub fn order(&self) -> usize {
        self.tables.order()
    }

    pub fn names(&self) -> &[String] {
        &self.tables.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.tables.names[x]
    }

    pub fn tables(&self) -> &CategoryTables {
        &self.tables
    }

    pub fn plus_of(&self, x: usize) -> usize {
        self.tables.plus[x]
    }

    pub fn minus_of(&self, x: usize) -> usize {
        self.tables.minus[x]
    }

    /// `x ∘ y`, defined exactly when `x⁻ = y⁺`.
    pub fn comp(&self, x: usize, y: usize) -> Option<usize> {
        self.tables.comp[x * self.order() + y]
    }

    /// The object set `C⁺`, in element order.
    pub fn objects(&self) -> &[usize] {
        &self.objects
    }

    pub fn is_object(&self, e: usize) -> bool {
        self.row[e].is_some()
    }

    /// `ₑ|x`. Panics when `e` is not an object.
    pub fn ltr(&self, e: usize, x: usize) -> usize {
        let r = self.row[e].expect("left transcription row must be an object");
        self.tables.ltr[r * self.order() + x]
    }

    /// `x|_f`. Panics when `f` is not an object.
    pub fn rtr(&self, f: usize, x: usize) -> usize {
        let r = self.row[f].expect("right transcription row must be an object");
        self.tables.rtr[r * self.order() + x]
    }

    /// The band `(C⁺, |)` of objects, as a semigroup with `e⁺ = e⁻ = e`.
    pub fn object_band(&self) -> FiniteUnarySemigroup {
        let k = self.objects.len();
        let names = self
            .objects
            .iter()
            .map(|&e| self.tables.names[e].clone())
            .collect();
        let mut mul = vec![0; k * k];
        for (i, &e) in self.objects.iter().enumerate() {
            for (j, &f) in self.objects.iter().enumerate() {
                let ef = self.rtr(f, e);
                mul[i * k + j] = self.row[ef].expect("object band is closed");
            }
        }
        let id: Vec<usize> = (0..k).collect();
        FiniteUnarySemigroup::new(names, mul, Some(id.clone()), Some(id), None)
            .expect("object band is associative")
    }

    /// The inverse map `x ↦ x⁻¹` with `x ∘ x⁻¹ = x⁺` and `x⁻¹ ∘ x = x⁻`,
    /// or the first arrow lacking an inverse.
    pub fn inverse_map(&self) -> Result<Vec<usize>, usize> {
        let n = self.order();
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let candidates: Vec<usize> = (0..n)
                .filter(|&y| {
                    self.comp(x, y) == Some(self.plus_of(x))
                        && self.comp(y, x) == Some(self.minus_of(x))
                })
                .collect();
            assert!(candidates.len() <= 1, "inverses in a category are unique");
            match candidates.first() {
                Some(&y) => inv.push(y),
                None => return Err(x),
            }
        }
        Ok(inv)
    }

    pub fn is_groupoid(&self) -> bool {
        self.inverse_map().is_ok()
    }
}

/// A discrete category (identities only) on the given objects, with `ₑ|x`
/// defined as `x` throughout; the induced object band is then forced to be
/// `e|_f = f`.
pub fn discrete(names: Vec<String>) -> Result<TranscriptionCategory, Error> {
    let n = names.len();
    let id: Vec<usize> = (0..n).collect();
    let mut comp = vec![None; n * n];
    for x in 0..n {
        comp[x * n + x] = Some(x);
    }
    let mut ltr = vec![0; n * n];
    let mut rtr = vec![0; n * n];
    for e in 0..n {
        for x in 0..n {
            ltr[e * n + x] = x;
            rtr[e * n + x] = e;
        }
    }
    TranscriptionCategory::validate(CategoryTables {
        names,
        plus: id.clone(),
        minus: id,
        comp,
        ltr,
        rtr,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::trace_category;
    use crate::instances;

    fn named(tokens: &[&str]) -> Vec<String> {
        tokens.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn terminal_category_is_valid() {
        let c = discrete(named(&["e"])).unwrap();
        assert_eq!(c.objects(), &[0]);
        assert_eq!(c.comp(0, 0), Some(0));
    }

    #[test]
    fn discrete_category_on_three_objects_is_valid() {
        let c = discrete(named(&["e", "f", "g"])).unwrap();
        assert_eq!(c.objects().len(), 3);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(c.comp(x, y).is_some(), x == y);
            }
        }
        // ₑ|x defined as x makes 3.1b trivially true.
        assert_eq!(c.ltr(1, 2), 2);
    }

    #[test]
    fn composition_outside_the_domain_is_rejected() {
        let c = discrete(named(&["e", "f"])).unwrap();
        let mut tables = c.tables().clone();
        tables.comp[1] = Some(0); // cell (0,1), but 0⁻ ≠ 1⁺
        assert_eq!(
            TranscriptionCategory::validate(tables).unwrap_err(),
            Error::DomainMismatch {
                x: 0,
                y: 1,
                defined: true
            }
        );
    }

    #[test]
    fn trace_of_a_band_satisfies_every_transcription_axiom() {
        let c = trace_category(&instances::rectangular_band(2, 2)).unwrap();
        for r in transcription_reports(c.tables()).unwrap() {
            assert!(r.holds, "{} fails on a trace category", r.axiom);
        }
    }

    #[test]
    fn mutated_transcription_table_produces_a_witness() {
        let c = trace_category(&instances::left_zero_band(2)).unwrap();
        let mut tables = c.tables().clone();
        // Corrupt ₐ|b: a·b = a in the left zero band, forge it to b.
        tables.ltr[1] = 1;
        let reports = transcription_reports(&tables).unwrap();
        assert!(reports.iter().any(|r| !r.holds));
        assert!(TranscriptionCategory::validate(tables).is_err());
    }

    #[test]
    fn object_band_of_a_trace_recovers_the_band() {
        let b = instances::left_zero_band(2);
        let c = trace_category(&b).unwrap();
        let ob = c.object_band();
        assert_eq!(ob.mul_table(), b.mul_table());
        assert_eq!(ob.names(), b.names());
    }

    #[test]
    fn object_band_of_a_reduced_monoid_is_trivial() {
        let m = instances::reduced(&instances::chain_semilattice(2)).unwrap();
        let c = trace_category(&m).unwrap();
        assert_eq!(c.object_band().order(), 1);
    }

    #[test]
    fn discrete_categories_are_groupoids_with_identity_inverses() {
        let c = discrete(named(&["e", "f"])).unwrap();
        assert_eq!(c.inverse_map().unwrap(), vec![0, 1]);
    }

    #[test]
    fn group_trace_inverts_by_the_group_inverse() {
        let g = instances::cyclic_group(2);
        let c = trace_category(&g).unwrap();
        // Scan-based oracle: y is an inverse of x iff both trace products hit
        // the projections.
        let expected: Vec<usize> = (0..2)
            .map(|x| {
                (0..2)
                    .find(|&y| {
                        c.comp(x, y) == Some(c.plus_of(x)) && c.comp(y, x) == Some(c.minus_of(x))
                    })
                    .unwrap()
            })
            .collect();
        assert_eq!(c.inverse_map().unwrap(), expected);
        assert_eq!(c.inverse_map().unwrap(), vec![0, 1], "g⁻¹ = g in Z2");
    }

    #[test]
    fn groupoid_detection_separates_bands_from_reduced_chains() {
        // In a band with identity unary maps every arrow is an object and its
        // own inverse.
        let c = trace_category(&instances::left_zero_band(2)).unwrap();
        assert!(c.is_groupoid());
        // In the reduced two-chain the composition is total but 0 ∘ y = 0
        // never reaches the single object 1.
        let m = instances::reduced(&instances::chain_semilattice(2)).unwrap();
        let chain = trace_category(&m).unwrap();
        assert_eq!(chain.inverse_map(), Err(0));
    }
}
