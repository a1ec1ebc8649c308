//! Equational axioms and exhaustive checkers with minimal witnesses.
//!
//! Axiom identifiers follow the numbering used throughout the crate's reports
//! and file tooling: `2.1a`–`2.1e` for categories, `3.1a`–`3.1f` and `3.2`
//! for transcription maps, `4.1a`–`4.1g` and `4.2` for localisable
//! semigroups, `5.1l/r` (ample), `cp`, `5.2l/r` (Ehresmann), `d3`, and
//! `8.1a`–`8.1e`, `8.2`, `8.3a/b` for the star laws.

use crate::semigroup::FiniteUnarySemigroup;
use crate::{Error, UnaryOp};
use std::fmt;
use std::str::FromStr;

/// Identifier of a single equational axiom.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomId {
    // Small categories.
    Cat_a,
    Cat_b,
    Cat_c,
    Cat_d,
    Cat_e,
    // Transcription maps; `Tr_derived` is the identity 3.2 that follows from
    // the others.
    Tr_a,
    Tr_b,
    Tr_c,
    Tr_d,
    Tr_e,
    Tr_f,
    Tr_derived,
    // Localisable semigroups.
    Loc_a,
    Loc_b,
    Loc_c,
    Loc_d,
    Loc_e,
    Loc_f,
    Loc_g,
    MixedSign,
    // Restriction / Ehresmann layer.
    Ample_l,
    Ample_r,
    Cp,
    Ehr_l,
    Ehr_r,
    D3,
    // Star layer.
    Star_a,
    Star_b,
    Star_c,
    Star_d,
    Star_e,
    StarInvolution,
    StarLink_a,
    StarLink_b,
}

impl AxiomId {
    pub fn as_str(self) -> &'static str {
        use AxiomId::*;
        match self {
            Cat_a => "2.1a",
            Cat_b => "2.1b",
            Cat_c => "2.1c",
            Cat_d => "2.1d",
            Cat_e => "2.1e",
            Tr_a => "3.1a",
            Tr_b => "3.1b",
            Tr_c => "3.1c",
            Tr_d => "3.1d",
            Tr_e => "3.1e",
            Tr_f => "3.1f",
            Tr_derived => "3.2",
            Loc_a => "4.1a",
            Loc_b => "4.1b",
            Loc_c => "4.1c",
            Loc_d => "4.1d",
            Loc_e => "4.1e",
            Loc_f => "4.1f",
            Loc_g => "4.1g",
            MixedSign => "4.2",
            Ample_l => "5.1l",
            Ample_r => "5.1r",
            Cp => "cp",
            Ehr_l => "5.2l",
            Ehr_r => "5.2r",
            D3 => "d3",
            Star_a => "8.1a",
            Star_b => "8.1b",
            Star_c => "8.1c",
            Star_d => "8.1d",
            Star_e => "8.1e",
            StarInvolution => "8.2",
            StarLink_a => "8.3a",
            StarLink_b => "8.3b",
        }
    }

    /// All axioms checkable on a unary semigroup.
    pub fn semigroup_axioms() -> &'static [AxiomId] {
        use AxiomId::*;
        &[
            Loc_a, Loc_b, Loc_c, Loc_d, Loc_e, Loc_f, Loc_g, MixedSign, Ample_l, Ample_r, Cp,
            Ehr_l, Ehr_r, D3, Star_a, Star_b, Star_c, Star_d, Star_e, StarInvolution, StarLink_a,
            StarLink_b,
        ]
    }

    pub fn is_semigroup_axiom(self) -> bool {
        Self::semigroup_axioms().contains(&self)
    }

    /// Unary maps that must be present before the axiom can be evaluated.
    pub fn required_maps(self) -> &'static [UnaryOp] {
        use AxiomId::*;
        match self {
            Loc_a | Loc_b | Loc_c | Ample_l | Cp | Ehr_l | D3 => &[UnaryOp::Plus],
            Loc_d | Loc_e | Loc_f | Ample_r | Ehr_r => &[UnaryOp::Minus],
            Loc_g | MixedSign => &[UnaryOp::Plus, UnaryOp::Minus],
            Star_a | Star_b | Star_c | Star_d | Star_e | StarInvolution | StarLink_a
            | StarLink_b => &[UnaryOp::Star],
            _ => &[],
        }
    }

    /// Number of universally quantified element variables.
    pub fn arity(self) -> usize {
        use AxiomId::*;
        match self {
            Loc_a | Loc_d | Loc_g | Star_a | Star_b | Star_c | StarInvolution | StarLink_a
            | StarLink_b => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        use AxiomId::*;
        const ALL: &[AxiomId] = &[
            Cat_a, Cat_b, Cat_c, Cat_d, Cat_e, Tr_a, Tr_b, Tr_c, Tr_d, Tr_e, Tr_f, Tr_derived,
            Loc_a, Loc_b, Loc_c, Loc_d, Loc_e, Loc_f, Loc_g, MixedSign, Ample_l, Ample_r, Cp,
            Ehr_l, Ehr_r, D3, Star_a, Star_b, Star_c, Star_d, Star_e, StarInvolution, StarLink_a,
            StarLink_b,
        ];
        let lower = s.to_ascii_lowercase();
        ALL.iter()
            .copied()
            .find(|a| a.as_str() == lower)
            .ok_or_else(|| Error::UnknownAxiomId(s.to_string()))
    }
}

/// Result of checking a single axiom over all tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    /// Lexicographically first violating tuple, when the axiom fails.
    pub witness: Option<Vec<usize>>,
}

/// The three left axioms `4.1a`–`4.1c`.
pub const LEFT_LOCALISABLE: &[AxiomId] = &[AxiomId::Loc_a, AxiomId::Loc_b, AxiomId::Loc_c];
/// The three right axioms `4.1d`–`4.1f`.
pub const RIGHT_LOCALISABLE: &[AxiomId] = &[AxiomId::Loc_d, AxiomId::Loc_e, AxiomId::Loc_f];
/// The full suite `4.1a`–`4.1g`.
pub const LOCALISABLE: &[AxiomId] = &[
    AxiomId::Loc_a,
    AxiomId::Loc_b,
    AxiomId::Loc_c,
    AxiomId::Loc_d,
    AxiomId::Loc_e,
    AxiomId::Loc_f,
    AxiomId::Loc_g,
];
pub const LEFT_EHRESMANN: &[AxiomId] = &[AxiomId::Loc_a, AxiomId::Loc_b, AxiomId::Ehr_l];
pub const RIGHT_EHRESMANN: &[AxiomId] = &[AxiomId::Loc_d, AxiomId::Loc_e, AxiomId::Ehr_r];
pub const EHRESMANN: &[AxiomId] = &[
    AxiomId::Loc_a,
    AxiomId::Loc_b,
    AxiomId::Ehr_l,
    AxiomId::Loc_d,
    AxiomId::Loc_e,
    AxiomId::Ehr_r,
    AxiomId::Loc_g,
];
/// Restriction semigroups: `4.1a,c,d,f,g` plus the ample identities and `cp`.
pub const RESTRICTION: &[AxiomId] = &[
    AxiomId::Loc_a,
    AxiomId::Loc_c,
    AxiomId::Loc_d,
    AxiomId::Loc_f,
    AxiomId::Loc_g,
    AxiomId::Ample_l,
    AxiomId::Ample_r,
    AxiomId::Cp,
];
/// The defining star axioms `8.1a`–`8.1e`.
pub const STAR_LOCALISABLE: &[AxiomId] = &[
    AxiomId::Star_a,
    AxiomId::Star_b,
    AxiomId::Star_c,
    AxiomId::Star_d,
    AxiomId::Star_e,
];
/// `8.1a` and `8.1b` alone (a regular unary semigroup).
pub const REGULAR_UNARY: &[AxiomId] = &[AxiomId::Star_a, AxiomId::Star_b];

/// Pairs of sides that must agree for the axiom instantiated at `t`.
fn sides(s: &FiniteUnarySemigroup, id: AxiomId, t: &[usize]) -> Vec<(usize, usize)> {
    use AxiomId::*;
    let m = |a: usize, b: usize| s.mul(a, b);
    let p = |a: usize| s.plus_of(a);
    let q = |a: usize| s.minus_of(a);
    let st = |a: usize| s.star_of(a);
    match id {
        Loc_a => {
            let x = t[0];
            vec![(m(p(x), x), x)]
        }
        Loc_b => {
            let (x, y) = (t[0], t[1]);
            vec![(p(m(x, y)), p(m(x, p(y))))]
        }
        Loc_c => {
            let (x, y) = (t[0], t[1]);
            vec![(m(p(x), p(y)), p(m(p(x), y)))]
        }
        Loc_d => {
            let x = t[0];
            vec![(m(x, q(x)), x)]
        }
        Loc_e => {
            let (x, y) = (t[0], t[1]);
            vec![(q(m(x, y)), q(m(q(x), y)))]
        }
        Loc_f => {
            let (x, y) = (t[0], t[1]);
            vec![(m(q(x), q(y)), q(m(x, q(y))))]
        }
        Loc_g => {
            let x = t[0];
            vec![(q(p(x)), p(x)), (p(q(x)), q(x))]
        }
        MixedSign => {
            let (x, y) = (t[0], t[1]);
            let mid = m(q(x), p(y));
            vec![(q(m(x, p(y))), mid), (mid, p(m(q(x), y)))]
        }
        Ample_l => {
            let (x, y) = (t[0], t[1]);
            vec![(m(x, p(y)), m(p(m(x, y)), x))]
        }
        Ample_r => {
            let (x, y) = (t[0], t[1]);
            vec![(m(q(x), y), m(y, q(m(x, y))))]
        }
        Cp => {
            let (x, y) = (t[0], t[1]);
            vec![(m(p(x), p(y)), m(p(y), p(x)))]
        }
        Ehr_l => {
            let (x, y) = (t[0], t[1]);
            let prod = m(p(x), p(y));
            vec![(p(prod), prod), (prod, m(p(y), p(x)))]
        }
        Ehr_r => {
            let (x, y) = (t[0], t[1]);
            let prod = m(q(x), q(y));
            vec![(q(prod), prod), (prod, m(q(y), q(x)))]
        }
        D3 => {
            let (x, y) = (t[0], t[1]);
            let xy = p(m(x, y));
            let mid = m(p(x), xy);
            vec![(m(xy, p(x)), mid), (mid, xy)]
        }
        Star_a => {
            let x = t[0];
            vec![(m(m(x, st(x)), x), x)]
        }
        Star_b => {
            let x = t[0];
            vec![(m(m(st(x), x), st(x)), st(x))]
        }
        Star_c => {
            let x = t[0];
            let u = m(m(x, st(m(x, x))), x);
            vec![(st(u), u)]
        }
        Star_d => {
            let (x, y) = (t[0], t[1]);
            let xy = m(x, y);
            vec![(m(x, st(m(xy, st(y)))), m(xy, st(xy)))]
        }
        Star_e => {
            let (x, y) = (t[0], t[1]);
            let xy = m(x, y);
            vec![(m(st(m(m(st(x), x), y)), y), m(st(xy), xy))]
        }
        StarInvolution => {
            let x = t[0];
            vec![(st(st(x)), x)]
        }
        StarLink_a => {
            let x = t[0];
            vec![(m(st(x), st(st(x))), m(st(x), x))]
        }
        StarLink_b => {
            let x = t[0];
            vec![(m(st(st(x)), st(x)), m(x, st(x)))]
        }
        _ => unreachable!("not a semigroup axiom: {id}"),
    }
}

fn for_each_tuple(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    // Lexicographic iteration; returns the first tuple rejected by `f`.
    let mut t = vec![0usize; arity];
    loop {
        if !f(&t) {
            return Some(t);
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Exhaustively checks one axiom, reporting the lexicographically first
/// witness on failure.
pub fn check_axiom(s: &FiniteUnarySemigroup, id: AxiomId) -> Result<AxiomReport, Error> {
    if !id.is_semigroup_axiom() {
        return Err(Error::UnknownAxiomId(id.to_string()));
    }
    for &op in id.required_maps() {
        s.require(op)?;
    }
    let witness = for_each_tuple(s.order(), id.arity(), |t| {
        sides(s, id, t).iter().all(|&(l, r)| l == r)
    });
    Ok(AxiomReport {
        axiom: id,
        holds: witness.is_none(),
        witness,
    })
}

pub fn check_axioms(s: &FiniteUnarySemigroup, ids: &[AxiomId]) -> Result<Vec<AxiomReport>, Error> {
    ids.iter().map(|&id| check_axiom(s, id)).collect()
}

/// The first axiom in `ids` that fails, with its witness.
pub fn first_failure(
    s: &FiniteUnarySemigroup,
    ids: &[AxiomId],
) -> Result<Option<(AxiomId, Vec<usize>)>, Error> {
    for &id in ids {
        let report = check_axiom(s, id)?;
        if !report.holds {
            return Ok(Some((id, report.witness.unwrap())));
        }
    }
    Ok(None)
}

pub fn holds_all(s: &FiniteUnarySemigroup, ids: &[AxiomId]) -> Result<bool, Error> {
    Ok(first_failure(s, ids)?.is_none())
}

/// `holds_all` with missing unary maps treated as failure.
pub fn satisfies(s: &FiniteUnarySemigroup, ids: &[AxiomId]) -> bool {
    matches!(first_failure(s, ids), Ok(None))
}
