//! Charged `d`-symbols.
//!
//! Row `i` of a symbol is a strictly increasing sequence of beads
//! `β_{i,k}`, `k ≤ r_i`, with `β_{i,k} = k` for `k ≪ 0`. Only the finite
//! displacement data is stored: the bead at position `k` has value
//! `k + λ^{(i)}_{r_i - k + 1}` where `λ^{(i)}` is a partition (zero beyond
//! its length). The displacement partitions form a [`DPartition`] whose
//! size is the height of the symbol.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{DPartition, Partition};
use crate::error::{Error, Result};

/// Weakly decreasing charges `r_1 ≥ ... ≥ r_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ChargeVector(Vec<i64>);

impl ChargeVector {
    pub fn new(r: Vec<i64>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidParam("charge vector must be nonempty".into()));
        }
        if r.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::UnsortedParameters(format!(
                "charges {r:?} are not weakly decreasing"
            )));
        }
        Ok(ChargeVector(r))
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    /// Charge of row `i`, 1-based.
    pub fn charge(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn shifted(&self, by: i64) -> ChargeVector {
        ChargeVector(self.0.iter().map(|r| r + by).collect())
    }

    /// Smallest gap `r_i - r_{i+1}`; `None` when `d = 1`.
    pub fn min_gap(&self) -> Option<i64> {
        self.0.windows(2).map(|w| w[0] - w[1]).min()
    }

    /// Maximal runs of equal charges as 1-based inclusive index ranges.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for i in 1..=self.d() {
            match out.last_mut() {
                Some(last) if self.charge(last.1) == self.charge(i) => last.1 = i,
                _ => out.push((i, i)),
            }
        }
        out
    }
}

impl TryFrom<Vec<i64>> for ChargeVector {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        ChargeVector::new(v)
    }
}

impl From<ChargeVector> for Vec<i64> {
    fn from(r: ChargeVector) -> Vec<i64> {
        r.0
    }
}

impl fmt::Display for ChargeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for ChargeVector {
    type Err = Error;
    /// Comma-separated integers, e.g. `"2,2,1,0"`.
    fn from_str(s: &str) -> Result<Self> {
        let r = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad charge {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ChargeVector::new(r)
    }
}

/// A `d`-symbol: charges plus displacement partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    charges: ChargeVector,
    rows: DPartition,
}

impl Symbol {
    pub fn new(charges: ChargeVector, rows: DPartition) -> Result<Self> {
        if charges.d() != rows.d() {
            return Err(Error::InvalidParam(format!(
                "{} charges for a {}-partition",
                charges.d(),
                rows.d()
            )));
        }
        Ok(Symbol { charges, rows })
    }

    /// The highest weight symbol `S^0`: every row is `Z_{≤ r_i}`.
    pub fn empty(charges: ChargeVector) -> Self {
        let d = charges.d();
        Symbol {
            charges,
            rows: DPartition::empty(d),
        }
    }

    pub fn charges(&self) -> &ChargeVector {
        &self.charges
    }

    /// The associated `d`-partition `λ^{(i)}_j = β_{i, r_i - j + 1} - (r_i - j + 1)`.
    pub fn dpartition(&self) -> &DPartition {
        &self.rows
    }

    pub fn into_dpartition(self) -> DPartition {
        self.rows
    }

    pub fn d(&self) -> usize {
        self.charges.d()
    }

    pub fn height(&self) -> u32 {
        self.rows.size()
    }

    /// `β_{i,k}` for `k ≤ r_i` (row 1-based).
    pub fn bead(&self, i: usize, k: i64) -> i64 {
        let r = self.charges.charge(i);
        assert!(k <= r, "position {k} above charge {r}");
        let j = (r - k + 1) as usize;
        k + self.rows.component(i).part(j) as i64
    }

    /// Whether value `v` is a bead of row `i`.
    pub fn contains(&self, i: usize, v: i64) -> bool {
        let r = self.charges.charge(i);
        let lambda = self.rows.component(i);
        let len = lambda.len() as i64;
        if v <= r - len {
            return true;
        }
        (1..=lambda.len()).any(|j| (r - j as i64 + 1) + lambda.part(j) as i64 == v)
    }

    /// Bead values of row `i` at positions `r_i - window + 1 ..= r_i`,
    /// increasing. `window` must be at least the row length.
    pub fn row_beads(&self, i: usize, window: usize) -> Vec<i64> {
        let r = self.charges.charge(i);
        (0..window as i64)
            .rev()
            .map(|off| self.bead(i, r - off))
            .collect()
    }

    /// Displaced beads of row `i` as `(position, value)`, `value > position`.
    pub fn displaced_beads(&self, i: usize) -> Vec<(i64, i64)> {
        let r = self.charges.charge(i);
        let lambda = self.rows.component(i);
        (1..=lambda.len())
            .map(|j| {
                let k = r - j as i64 + 1;
                (k, k + lambda.part(j) as i64)
            })
            .collect()
    }

    /// Moves the bead of value `from` in row `i` to the free value `to`,
    /// where `|from - to| = 1`. Returns `None` if the move is not allowed.
    pub fn move_bead(&self, i: usize, from: i64, to: i64) -> Option<Symbol> {
        debug_assert_eq!((from - to).abs(), 1);
        if !self.contains(i, from) || self.contains(i, to) {
            return None;
        }
        let r = self.charges.charge(i);
        let window = self.rows.component(i).len() + 2;
        let mut beads = self.row_beads(i, window);
        let pos = beads.iter().position(|&b| b == from)?;
        beads[pos] = to;
        let p = partition_from_beads(r, &beads);
        Some(Symbol {
            charges: self.charges.clone(),
            rows: self.rows.with_component(i, p),
        })
    }

    pub fn displaced_values(&self) -> BTreeSet<i64> {
        (1..=self.d())
            .flat_map(|i| self.displaced_beads(i).into_iter().map(|(_, v)| v))
            .collect()
    }
}

/// Inverse of [`Symbol::row_beads`]: beads listed increasingly for the
/// positions ending at `r`.
fn partition_from_beads(r: i64, beads: &[i64]) -> Partition {
    let w = beads.len() as i64;
    let parts: Vec<u32> = (1..=w)
        .map(|j| {
            let k = r - j + 1;
            let b = beads[(w - j) as usize];
            debug_assert!(b >= k);
            (b - k) as u32
        })
        .collect();
    Partition::new(parts).expect("beads strictly increasing")
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.rows, self.charges)
    }
}

pub fn symbol_from_dpartition(lambda: &DPartition, r: &ChargeVector) -> Result<Symbol> {
    Symbol::new(r.clone(), lambda.clone())
}

pub fn dpartition_from_symbol(s: &Symbol) -> DPartition {
    s.dpartition().clone()
}

/// Builds a symbol from explicit bead rows. Each row lists the beads at
/// positions `r_i - len + 1 ..= r_i` in increasing order; positions below
/// are assumed undisplaced.
pub fn symbol_from_beads(r: &ChargeVector, rows: &[Vec<i64>]) -> Result<Symbol> {
    if rows.len() != r.d() {
        return Err(Error::InvalidParam("one bead row per charge".into()));
    }
    let mut comps = Vec::with_capacity(rows.len());
    for (i, beads) in rows.iter().enumerate() {
        let ri = r.charge(i + 1);
        let w = beads.len() as i64;
        if beads.windows(2).any(|x| x[0] >= x[1]) {
            return Err(Error::InvalidParam(format!("beads {beads:?} not increasing")));
        }
        if beads.first().is_some_and(|&b| b < ri - w + 1) {
            return Err(Error::InvalidParam(format!(
                "beads {beads:?} fall below the undisplaced tail"
            )));
        }
        comps.push(partition_from_beads(ri, beads));
    }
    Symbol::new(r.clone(), DPartition::new(comps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_dpartitions;

    fn r(s: &str) -> ChargeVector {
        s.parse().unwrap()
    }

    #[test]
    fn empty_dpartition_gives_highest_symbol() {
        let s = symbol_from_dpartition(&DPartition::empty(3), &r("4,1,-2")).unwrap();
        assert_eq!(s, Symbol::empty(r("4,1,-2")));
        assert_eq!(s.bead(1, 4), 4);
        assert_eq!(s.bead(3, -7), -7);
    }

    #[test]
    fn two_column_symbol() {
        // ((1,1), ∅) at r = (1, 0): row 1 beads 1, 2 at positions 0, 1
        let lambda: DPartition = "1.1|∅".parse().unwrap();
        let s = symbol_from_dpartition(&lambda, &r("1,0")).unwrap();
        assert_eq!(s.bead(1, 1), 2);
        assert_eq!(s.bead(1, 0), 1);
        assert_eq!(s.bead(1, -1), -1);
        assert_eq!(s.row_beads(1, 3), vec![-1, 1, 2]);
        let back = symbol_from_beads(&r("1,0"), &[vec![1, 2], vec![]]).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn bead_round_trip_is_exhaustive() {
        for rv in ["0", "1,0", "2,2,-1"] {
            let ch = r(rv);
            for n in 0..=4 {
                for lambda in enumerate_dpartitions(ch.d(), n) {
                    let s = symbol_from_dpartition(&lambda, &ch).unwrap();
                    assert_eq!(s.height(), n);
                    let rows: Vec<Vec<i64>> = (1..=ch.d())
                        .map(|i| s.row_beads(i, s.dpartition().component(i).len() + 1))
                        .collect();
                    let back = symbol_from_beads(&ch, &rows).unwrap();
                    assert_eq!(dpartition_from_symbol(&back), lambda);
                    // membership agrees with explicit beads
                    for i in 1..=ch.d() {
                        let beads = s.row_beads(i, 8);
                        for v in beads[0]..beads[7] + 3 {
                            assert_eq!(s.contains(i, v), beads.contains(&v), "{s} row {i} value {v}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn moving_beads() {
        let s0 = Symbol::empty(r("1,0"));
        let s = s0.move_bead(1, 1, 2).unwrap();
        assert_eq!(s.dpartition().to_string(), "1|∅");
        assert!(s0.move_bead(1, 0, 1).is_none());
        let s = s.move_bead(1, 0, 1).unwrap();
        assert_eq!(s.dpartition().to_string(), "1.1|∅");
        assert_eq!(s.move_bead(1, 1, 0).unwrap().dpartition().to_string(), "1|∅");
    }

    #[test]
    fn charges_validate() {
        assert!("0,-1".parse::<ChargeVector>().is_ok());
        assert!(matches!("0,1".parse::<ChargeVector>(), Err(Error::UnsortedParameters(_))));
        assert_eq!(r("2,2,1,0").blocks(), vec![(1, 2), (3, 3), (4, 4)]);
        assert_eq!(r("2,2,1,0").min_gap(), Some(0));
    }
}
