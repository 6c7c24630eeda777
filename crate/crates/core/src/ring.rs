//! Finite commutative rings and ultrametric value maps on them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Report, Result, Violation};
use crate::group::{AutSubgroup, FiniteGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRing {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
}

impl FiniteRing {
    /// Verifies the commutative ring axioms exhaustively. Zero and one are
    /// recovered from the tables.
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = add.len();
        let square = |t: &Vec<Vec<usize>>| {
            t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&c| c < n))
        };
        if n == 0 || !square(&add) || !square(&mul) {
            return Err(Error::Structure(Report::single("ring-shape", vec![n])));
        }
        let additive = FiniteGroup::new(add.clone())?;
        let fail = |axiom: &'static str, w: Vec<usize>| Error::Structure(Report::single(axiom, w));
        for a in 0..n {
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return Err(fail("ring-additive-commutativity", vec![a, b]));
                }
                if mul[a][b] != mul[b][a] {
                    return Err(fail("ring-multiplicative-commutativity", vec![a, b]));
                }
            }
        }
        let one = (0..n)
            .find(|&u| (0..n).all(|x| mul[u][x] == x))
            .ok_or_else(|| fail("ring-one", vec![]))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(fail("ring-multiplicative-associativity", vec![a, b, c]));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(fail("ring-distributivity", vec![a, b, c]));
                    }
                }
            }
        }
        Ok(FiniteRing {
            zero: additive.identity(),
            neg: additive.inverses().to_vec(),
            add,
            mul,
            one,
        })
    }

    /// `Z/n`.
    pub fn integers_mod(n: usize) -> Self {
        let add = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a * b) % n).collect())
            .collect();
        FiniteRing::new(add, mul).expect("Z/n is a ring")
    }

    /// `GF(2^k)` as bit polynomials modulo `modulus` (including the `x^k` bit).
    pub fn binary_field(k: u32, modulus: usize) -> Result<Self> {
        let n = 1usize << k;
        let mulmod = |a: usize, b: usize| {
            let mut acc = 0usize;
            for i in 0..k {
                if b >> i & 1 == 1 {
                    acc ^= a << i;
                }
            }
            for i in (k..2 * k).rev() {
                if acc >> i & 1 == 1 {
                    acc ^= modulus << (i - k);
                }
            }
            acc
        };
        let add = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| mulmod(a, b)).collect())
            .collect();
        let ring = FiniteRing::new(add, mul)?;
        if ring.units().len() != n - 1 {
            return Err(Error::Precondition(format!(
                "modulus {modulus:#b} is not irreducible over GF(2)"
            )));
        }
        Ok(ring)
    }

    pub fn order(&self) -> usize {
        self.add.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg[b]]
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn additive_group(&self) -> FiniteGroup {
        FiniteGroup::new(self.add.clone()).expect("additive group")
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&a| (0..self.order()).any(|b| self.mul[a][b] == self.one))
            .collect()
    }

    /// Units `u` with `u^k = 1`.
    pub fn roots_of_unity(&self, k: usize) -> Vec<usize> {
        self.units()
            .into_iter()
            .filter(|&u| (0..k).fold(self.one, |acc, _| self.mul(acc, u)) == self.one)
            .collect()
    }

    /// Checks that `elements` is a multiplicative subgroup of the units.
    pub fn check_unit_subgroup(&self, elements: &[usize]) -> Result<()> {
        let units: BTreeSet<usize> = self.units().into_iter().collect();
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if set.is_empty() || !set.contains(&self.one) {
            return Err(Error::Precondition(
                "unit subgroup must contain 1".to_string(),
            ));
        }
        if let Some(&x) = set.iter().find(|x| !units.contains(x)) {
            return Err(Error::Precondition(format!("{x} is not a unit")));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::Precondition(format!(
                        "{a}·{b} leaves the unit subgroup"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The unit subgroup acting on the additive group by scaling.
    pub fn scaling_automorphisms(&self, units: &[usize]) -> Result<AutSubgroup> {
        self.check_unit_subgroup(units)?;
        let perms = units
            .iter()
            .map(|&g| (0..self.order()).map(|a| self.mul(g, a)).collect())
            .collect();
        AutSubgroup::new(&self.additive_group(), perms)
    }
}

/// A point of a value chain: a finite rank or the top element `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Finite(usize),
    Infinite,
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
            (Value::Finite(_), Value::Infinite) => Ordering::Less,
            (Value::Infinite, Value::Finite(_)) => Ordering::Greater,
            (Value::Infinite, Value::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinite => write!(f, "inf"),
        }
    }
}

impl Value {
    /// Class index in a valuation scheme: `∞ ↦ 0`, rank `i ↦ i + 1`.
    pub fn class_index(self) -> usize {
        match self {
            Value::Infinite => 0,
            Value::Finite(v) => v + 1,
        }
    }

    pub fn from_class_index(c: usize) -> Self {
        if c == 0 {
            Value::Infinite
        } else {
            Value::Finite(c - 1)
        }
    }
}

/// A finite ring with an ultrametric value map onto the chain
/// `0 < 1 < … < finite_values-1 < ∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedRing {
    ring: FiniteRing,
    finite_values: usize,
    val: Vec<Value>,
}

impl ValuedRing {
    pub fn new(ring: FiniteRing, finite_values: usize, val: Vec<Value>) -> Result<Self> {
        let n = ring.order();
        let fail = |axiom: &'static str, w: Vec<usize>| Error::Structure(Report::single(axiom, w));
        if val.len() != n {
            return Err(fail("valuation-shape", vec![val.len()]));
        }
        if let Some(x) = (0..n).find(|&x| (val[x] == Value::Infinite) != (x == ring.zero())) {
            return Err(fail("valuation-infinity", vec![x]));
        }
        if let Some(x) = (0..n).find(|&x| matches!(val[x], Value::Finite(v) if v >= finite_values))
        {
            return Err(fail("valuation-range", vec![x]));
        }
        let mut bad = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if val[ring.add(x, y)] < val[x].min(val[y]) {
                    bad.push(Violation::new("ultrametric", vec![x, y]));
                }
            }
        }
        if !bad.is_empty() {
            bad.truncate(crate::error::MAX_WITNESSES);
            return Err(Error::Structure(Report::failed(bad)));
        }
        if let Some(x) = (0..n).find(|&x| val[ring.neg(x)] != val[x]) {
            return Err(fail("valuation-symmetry", vec![x]));
        }
        let hit: BTreeSet<Value> = val.iter().copied().collect();
        if let Some(v) = (0..finite_values).find(|&v| !hit.contains(&Value::Finite(v))) {
            return Err(fail("valuation-surjectivity", vec![v]));
        }
        Ok(ValuedRing {
            ring,
            finite_values,
            val,
        })
    }

    /// `Z/p^k` with the `p`-adic valuation; chain `0 < … < k-1 < ∞`.
    pub fn p_adic(p: usize, k: u32) -> Result<Self> {
        let n = p.pow(k);
        let ring = FiniteRing::integers_mod(n);
        let val = (0..n)
            .map(|x| {
                if x == 0 {
                    Value::Infinite
                } else {
                    let mut v = 0;
                    let mut y = x;
                    while y % p == 0 {
                        y /= p;
                        v += 1;
                    }
                    Value::Finite(v)
                }
            })
            .collect();
        ValuedRing::new(ring, k as usize, val)
    }

    /// The trivial valuation: every nonzero element has value 0.
    pub fn trivial(ring: FiniteRing) -> Result<Self> {
        let zero = ring.zero();
        let val = (0..ring.order())
            .map(|x| {
                if x == zero {
                    Value::Infinite
                } else {
                    Value::Finite(0)
                }
            })
            .collect();
        ValuedRing::new(ring, 1, val)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn finite_values(&self) -> usize {
        self.finite_values
    }

    pub fn val(&self, x: usize) -> Value {
        self.val[x]
    }

    /// `ν(a - b)`.
    pub fn distance(&self, a: usize, b: usize) -> Value {
        self.val[self.ring.sub(a, b)]
    }

    /// The chain `v0 < … < ∞` in increasing order.
    pub fn chain(&self) -> Vec<Value> {
        (0..self.finite_values)
            .map(Value::Finite)
            .chain([Value::Infinite])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_fields_have_full_unit_groups() {
        let f16 = FiniteRing::binary_field(4, 0b10011).unwrap();
        assert_eq!(f16.units().len(), 15);
        assert_eq!(f16.roots_of_unity(3).len(), 3);
        let f64 = FiniteRing::binary_field(6, 0b1000011).unwrap();
        assert_eq!(f64.roots_of_unity(3).len(), 3);
        assert!(FiniteRing::binary_field(4, 0b10101).is_err());
    }

    #[test]
    fn unit_subgroups() {
        let f7 = FiniteRing::integers_mod(7);
        assert!(f7.check_unit_subgroup(&[1, 2, 4]).is_ok());
        assert!(f7.check_unit_subgroup(&[1, 3]).is_err());
        assert!(FiniteRing::integers_mod(8)
            .check_unit_subgroup(&[1, 2])
            .is_err());
    }

    #[test]
    fn p_adic_values() {
        let z8 = ValuedRing::p_adic(2, 3).unwrap();
        assert_eq!(z8.val(4), Value::Finite(2));
        assert_eq!(z8.val(6), Value::Finite(1));
        assert_eq!(z8.val(0), Value::Infinite);
        assert_eq!(z8.chain().len(), 4);
    }

    #[test]
    fn non_ultrametric_map_is_rejected() {
        let z4 = FiniteRing::integers_mod(4);
        let val = vec![
            Value::Infinite,
            Value::Finite(0),
            Value::Finite(0),
            Value::Finite(1),
        ];
        match ValuedRing::new(z4, 2, val) {
            Err(Error::Structure(r)) => assert_eq!(r.first_axiom(), Some("ultrametric")),
            other => panic!("expected ultrametric failure, got {other:?}"),
        }
    }

    #[test]
    fn value_order_puts_infinity_on_top() {
        assert!(Value::Finite(7) < Value::Infinite);
        assert_eq!(Value::Finite(2).class_index(), 3);
        assert_eq!(Value::from_class_index(0), Value::Infinite);
    }
}
