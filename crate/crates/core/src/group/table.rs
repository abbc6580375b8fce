use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{GroupError, Result};

/// Dense element id. The identity is always `0`.
pub type Elem = usize;

/// Orders up to this bound get an exhaustive associativity check.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 256;

/// How associativity is certified for tables above [`FULL_ASSOCIATIVITY_LIMIT`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssociativityCheck {
    pub seed: u64,
}

impl Default for AssociativityCheck {
    fn default() -> Self {
        Self { seed: 0x5eed_5eed }
    }
}

/// A finite group stored as an explicit Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<(String, Elem)>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

impl GroupTable {
    /// Validates `rows` as a group table with identity `0` and wraps it.
    pub fn from_rows(
        name: impl Into<String>,
        rows: Vec<Vec<Elem>>,
        labels: Vec<(String, Elem)>,
        assoc: AssociativityCheck,
    ) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut mult = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            mult.extend(row.iter().map(|&x| x as u32));
        }
        Self::from_flat(name.into(), order, mult, labels, assoc)
    }

    pub(crate) fn from_flat(
        name: String,
        order: usize,
        mult: Vec<u32>,
        labels: Vec<(String, Elem)>,
        assoc: AssociativityCheck,
    ) -> Result<Self> {
        let bad = |msg: String| Err(GroupError::InvalidTable(msg));
        if mult.len() != order * order {
            return bad("table is not square".into());
        }
        if mult.iter().any(|&x| x as usize >= order) {
            return bad("entry out of range".into());
        }
        // Latin square
        for a in 0..order {
            let mut seen = BitSet::new(order);
            for b in 0..order {
                if !seen.insert(mult[a * order + b] as usize) {
                    return bad(format!("row {a} repeats an entry"));
                }
            }
        }
        for b in 0..order {
            let mut seen = BitSet::new(order);
            for a in 0..order {
                if !seen.insert(mult[a * order + b] as usize) {
                    return bad(format!("column {b} repeats an entry"));
                }
            }
        }
        for g in 0..order {
            if mult[g] as usize != g || mult[g * order] as usize != g {
                return bad(format!("element 0 is not an identity for {g}"));
            }
        }
        let mut inv = vec![0u32; order];
        for g in 0..order {
            let row = &mult[g * order..(g + 1) * order];
            let h = row.iter().position(|&x| x == 0).expect("latin row contains 0");
            if mult[h * order + g] != 0 {
                return bad(format!("element {g} has no two-sided inverse"));
            }
            inv[g] = h as u32;
        }
        for (label, e) in &labels {
            if *e >= order {
                return bad(format!("label {label} points outside the group"));
            }
        }
        let table = Self {
            name,
            order,
            mult,
            inv,
            labels,
        };
        table.check_associativity(assoc)?;
        Ok(table)
    }

    fn check_associativity(&self, assoc: AssociativityCheck) -> Result<()> {
        let n = self.order;
        let assoc_at = |a: Elem, b: Elem, c: Elem| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        let fail = |a, b, c| {
            Err(GroupError::InvalidTable(format!(
                "associativity fails at ({a}, {b}, {c})"
            )))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc_at(a, b, c) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
            return Ok(());
        }
        let gens: Vec<Elem> = self.labels.iter().map(|(_, e)| *e).collect();
        for &a in &gens {
            for &b in &gens {
                for &c in &gens {
                    if !assoc_at(a, b, c) {
                        return fail(a, b, c);
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(assoc.seed);
        for _ in 0..10 * n {
            let (a, b, c) = (
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            );
            if !assoc_at(a, b, c) {
                return fail(a, b, c);
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as usize
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// Least `k ≥ 1` with `e^k = 1`.
    pub fn element_order(&self, e: Elem) -> usize {
        let mut k = 1;
        let mut x = e;
        while x != 0 {
            x = self.mul(x, e);
            k += 1;
        }
        debug_assert_eq!(self.order % k, 0);
        k
    }

    pub fn labels(&self) -> &[(String, Elem)] {
        &self.labels
    }

    pub fn generator(&self, label: &str) -> Option<Elem> {
        self.labels.iter().find(|(l, _)| l == label).map(|(_, e)| *e)
    }

    pub fn row(&self, a: Elem) -> &[u32] {
        &self.mult[a * self.order..(a + 1) * self.order]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn with_labels(mut self, labels: Vec<(String, Elem)>) -> Self {
        self.labels = labels;
        self
    }
}

/// Element order, as a free function.
pub fn element_order(g: &GroupTable, e: Elem) -> usize {
    g.element_order(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> Vec<Vec<Elem>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn accepts_cyclic_table() {
        let g = GroupTable::from_rows("C5", z(5), vec![("a".into(), 1)], Default::default())
            .unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.inv(2), 3);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(3), 5);
        assert_eq!(g.pow(2, -1), 3);
    }

    #[test]
    fn rejects_non_latin_rows() {
        let mut rows = z(4);
        rows[1][2] = 1;
        assert!(matches!(
            GroupTable::from_rows("bad", rows, vec![], Default::default()),
            Err(GroupError::InvalidTable(_))
        ));
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // A loop of order 5 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GroupTable::from_rows("loop", rows, vec![], Default::default()).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }
}
