//! Finite unary semigroups as validated multiplication tables.

use crate::axioms::{self, AxiomId};
use crate::{Error, UnaryOp};

/// A finite semigroup on elements `0..n` with optional unary maps `+`, `-`, `*`.
///
/// Elements are dense indices with a parallel name table. Associativity is
/// validated on construction; all further structure (localisability, star
/// axioms, ...) is expressed through the checkers in [`crate::axioms`], which
/// report the lexicographically first witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteUnarySemigroup {
    names: Vec<String>,
    mul: Vec<usize>,
    plus: Option<Vec<usize>>,
    minus: Option<Vec<usize>>,
    star: Option<Vec<usize>>,
}

fn check_map(table: &'static str, map: &[usize], expected: usize, order: usize) -> Result<(), Error> {
    if map.len() != expected {
        return Err(Error::SizeMismatch {
            table,
            expected,
            got: map.len(),
        });
    }
    for (index, &value) in map.iter().enumerate() {
        if value >= order {
            return Err(Error::IndexOutOfRange {
                table,
                index,
                value,
                order,
            });
        }
    }
    Ok(())
}

impl FiniteUnarySemigroup {
    /// Validates the tables and returns the structure, or the first
    /// associativity witness in lexicographic order.
    pub fn new(
        names: Vec<String>,
        mul: Vec<usize>,
        plus: Option<Vec<usize>>,
        minus: Option<Vec<usize>>,
        star: Option<Vec<usize>>,
    ) -> Result<Self, Error> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].iter().any(|m| m == name) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        check_map("mul", &mul, n * n, n)?;
        if let Some(map) = &plus {
            check_map("plus", map, n, n)?;
        }
        if let Some(map) = &minus {
            check_map("minus", map, n, n)?;
        }
        if let Some(map) = &star {
            check_map("star", map, n, n)?;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul[mul[x * n + y] * n + z] != mul[x * n + mul[y * n + z]] {
                        return Err(Error::NonAssociative { x, y, z });
                    }
                }
            }
        }
        Ok(Self {
            names,
            mul,
            plus,
            minus,
            star,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    /// The product `x · y`.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order() + y]
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn unary(&self, op: UnaryOp) -> Option<&[usize]> {
        match op {
            UnaryOp::Plus => self.plus.as_deref(),
            UnaryOp::Minus => self.minus.as_deref(),
            UnaryOp::Star => self.star.as_deref(),
        }
    }

    pub fn has(&self, op: UnaryOp) -> bool {
        self.unary(op).is_some()
    }

    pub fn require(&self, op: UnaryOp) -> Result<&[usize], Error> {
        self.unary(op).ok_or(Error::MissingUnary(op))
    }

    /// `x⁺`. Panics when the `+` map is absent.
    pub fn plus_of(&self, x: usize) -> usize {
        self.plus.as_ref().expect("plus map present")[x]
    }

    /// `x⁻`. Panics when the `-` map is absent.
    pub fn minus_of(&self, x: usize) -> usize {
        self.minus.as_ref().expect("minus map present")[x]
    }

    /// `x∗`. Panics when the `*` map is absent.
    pub fn star_of(&self, x: usize) -> usize {
        self.star.as_ref().expect("star map present")[x]
    }

    /// Returns a copy with the given unary map installed (replacing any
    /// previous one).
    pub fn with_unary(&self, op: UnaryOp, map: Vec<usize>) -> Result<Self, Error> {
        let table = match op {
            UnaryOp::Plus => "plus",
            UnaryOp::Minus => "minus",
            UnaryOp::Star => "star",
        };
        check_map(table, &map, self.order(), self.order())?;
        let mut out = self.clone();
        match op {
            UnaryOp::Plus => out.plus = Some(map),
            UnaryOp::Minus => out.minus = Some(map),
            UnaryOp::Star => out.star = Some(map),
        }
        Ok(out)
    }

    /// Returns a copy with the given unary map removed.
    pub fn without_unary(&self, op: UnaryOp) -> Self {
        let mut out = self.clone();
        match op {
            UnaryOp::Plus => out.plus = None,
            UnaryOp::Minus => out.minus = None,
            UnaryOp::Star => out.star = None,
        }
        out
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn is_band(&self) -> bool {
        (0..self.order()).all(|x| self.mul(x, x) == x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// The two-sided identity, if the semigroup has one.
    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Whether the given element set is closed under multiplication.
    pub fn is_closed(&self, set: &[usize]) -> bool {
        set.iter()
            .all(|&x| set.iter().all(|&y| set.contains(&self.mul(x, y))))
    }

    /// The projection set `S⁺ = {x⁺ : x ∈ S}`, sorted.
    ///
    /// When the `-` map is also present and axiom `4.1g` holds, the set
    /// `{x⁻}` coincides with `S⁺`; this is asserted.
    pub fn projections(&self) -> Result<Vec<usize>, Error> {
        let plus = self.require(UnaryOp::Plus)?;
        let mut set: Vec<usize> = plus.to_vec();
        set.sort_unstable();
        set.dedup();
        if let Some(minus) = self.unary(UnaryOp::Minus) {
            if axioms::check_axiom(self, AxiomId::Loc_g)?.holds {
                let mut mset: Vec<usize> = minus.to_vec();
                mset.sort_unstable();
                mset.dedup();
                assert_eq!(set, mset, "S+ and S- must coincide under 4.1g");
            }
        }
        Ok(set)
    }

    /// The local submonoid `M_e = {x : x⁺ = x⁻ = e}` of a localisable
    /// semigroup, returned as a reduced structure with identity `e`.
    pub fn local_monoid(&self, e: usize) -> Result<Self, Error> {
        if let Some((axiom, witness)) = axioms::first_failure(self, axioms::LOCALISABLE)? {
            return Err(Error::NotLocalisable { axiom, witness });
        }
        if !self.projections()?.contains(&e) {
            return Err(Error::NotAProjection(e));
        }
        let n = self.order();
        let plus = self.unary(UnaryOp::Plus).unwrap();
        let minus = self.unary(UnaryOp::Minus).unwrap();
        let members: Vec<usize> = (0..n).filter(|&x| plus[x] == e && minus[x] == e).collect();
        let mut index_of = vec![None; n];
        for (i, &x) in members.iter().enumerate() {
            index_of[x] = Some(i);
        }
        let k = members.len();
        let mut mul = vec![0; k * k];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                mul[i * k + j] =
                    index_of[self.mul(x, y)].expect("M_e is closed under multiplication");
            }
        }
        let names = members.iter().map(|&x| self.names[x].clone()).collect();
        let ek = index_of[e].expect("e lies in its own local monoid");
        Self::new(names, mul, Some(vec![ek; k]), Some(vec![ek; k]), None)
    }
}
