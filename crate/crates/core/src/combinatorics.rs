//! Partitions, `d`-partitions, boxes and standard `d`-tableaux.
//!
//! Components of a `d`-partition and boxes are indexed `1..=d`, rows and
//! columns of a box are 1-based. Enumerations use the canonical order of
//! [`DPartition`]: component by component, larger components first, and
//! among partitions of equal size the lexicographically larger one first.
//! For `(d, n) = (2, 2)` this gives `2|∅, 1.1|∅, 1|1, ∅|2, ∅|1.1`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidParam(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `a`-th part (1-based), zero beyond the length.
    pub fn part(&self, a: usize) -> u32 {
        if a == 0 {
            return 0;
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    /// All partitions of `n`, lexicographically decreasing: `(n)` first,
    /// `(1^n)` last.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Sets part `a` (1-based) to `value`, extending or trimming as needed.
    /// The caller is responsible for the result being a partition.
    pub(crate) fn with_part(&self, a: usize, value: u32) -> Partition {
        let mut parts = self.0.clone();
        if parts.len() < a {
            parts.resize(a, 0);
        }
        parts[a - 1] = value;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('.')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A box `(row, col, comp)` of a Young diagram of a `d`-partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: u32,
    pub col: u32,
    pub comp: usize,
}

impl BoxCoord {
    pub fn new(row: u32, col: u32, comp: usize) -> Self {
        BoxCoord { row, col, comp }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// A `d`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DPartition {
    components: Vec<Partition>,
}

impl DPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParam("a d-partition needs d >= 1".into()));
        }
        Ok(DPartition { components })
    }

    pub fn empty(d: usize) -> Self {
        assert!(d >= 1, "d must be positive");
        DPartition {
            components: vec![Partition::empty(); d],
        }
    }

    /// Convenience constructor from raw parts; panics on invalid input.
    pub fn from_parts(parts: &[&[u32]]) -> Self {
        let comps = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()).expect("valid partition"))
            .collect();
        DPartition::new(comps).expect("d >= 1")
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `c`, 1-based.
    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c - 1]
    }

    pub(crate) fn with_component(&self, c: usize, p: Partition) -> DPartition {
        let mut components = self.components.clone();
        components[c - 1] = p;
        DPartition { components }
    }

    pub fn contains_box(&self, b: &BoxCoord) -> bool {
        b.comp >= 1
            && b.comp <= self.d()
            && b.row >= 1
            && b.col >= 1
            && b.col <= self.component(b.comp).part(b.row as usize)
    }

    /// All boxes, component by component, row by row.
    pub fn boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (ci, p) in self.components.iter().enumerate() {
            for (ai, &len) in p.parts().iter().enumerate() {
                for b in 1..=len {
                    out.push(BoxCoord::new(ai as u32 + 1, b, ci + 1));
                }
            }
        }
        out
    }

    pub fn content_sum(&self) -> i64 {
        self.boxes().iter().map(BoxCoord::content).sum()
    }

    pub fn addable_boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for (ci, p) in self.components.iter().enumerate() {
            for a in 1..=p.len() + 1 {
                if a == 1 || p.part(a - 1) > p.part(a) {
                    out.push(BoxCoord::new(a as u32, p.part(a) + 1, ci + 1));
                }
            }
        }
        out
    }

    pub fn removable_boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for (ci, p) in self.components.iter().enumerate() {
            for a in 1..=p.len() {
                if p.part(a + 1) < p.part(a) {
                    out.push(BoxCoord::new(a as u32, p.part(a), ci + 1));
                }
            }
        }
        out
    }

    pub fn add_box(&self, b: &BoxCoord) -> Result<DPartition> {
        if !self.addable_boxes().contains(b) {
            return Err(Error::InvalidParam(format!("{b} is not addable to {self}")));
        }
        let p = self.component(b.comp).with_part(b.row as usize, b.col);
        Ok(self.with_component(b.comp, p))
    }

    pub fn remove_box(&self, b: &BoxCoord) -> Result<DPartition> {
        if !self.removable_boxes().contains(b) {
            return Err(Error::InvalidParam(format!(
                "{b} is not removable from {self}"
            )));
        }
        let p = self.component(b.comp).with_part(b.row as usize, b.col - 1);
        Ok(self.with_component(b.comp, p))
    }

    /// Number of standard tableaux of this shape, i.e. the dimension of the
    /// corresponding irreducible representation.
    pub fn num_standard_tableaux(&self) -> u64 {
        if self.size() == 0 {
            return 1;
        }
        self.removable_boxes()
            .iter()
            .map(|b| {
                self.remove_box(b)
                    .expect("removable box")
                    .num_standard_tableaux()
            })
            .sum()
    }
}

impl Ord for DPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d().cmp(&other.d()).then_with(|| {
            self.components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.canonical_cmp(b))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for DPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("|"))
    }
}

impl FromStr for DPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .split('|')
            .map(Partition::from_str)
            .collect::<Result<Vec<_>>>()?;
        DPartition::new(comps)
    }
}

impl Serialize for DPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All `d`-partitions of `n` in canonical order.
pub fn enumerate_dpartitions(d: usize, n: u32) -> Vec<DPartition> {
    assert!(d >= 1, "d must be positive");
    fn rec(d: usize, rest: u32, cur: &mut Vec<Partition>, out: &mut Vec<DPartition>) {
        if cur.len() == d - 1 {
            let mut comps = cur.clone();
            // the last component absorbs what is left
            for p in Partition::all(rest) {
                comps.push(p);
                out.push(DPartition {
                    components: comps.clone(),
                });
                comps.pop();
            }
            return;
        }
        for size in (0..=rest).rev() {
            for p in Partition::all(size) {
                cur.push(p);
                rec(d, rest - size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// A standard `d`-tableau, stored as the sequence of boxes holding `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: DPartition,
    boxes: Vec<BoxCoord>,
}

impl StandardTableau {
    /// Validates that every prefix of `boxes` is the diagram of a
    /// `d`-partition and that the boxes fill `shape`.
    pub fn new(shape: DPartition, boxes: Vec<BoxCoord>) -> Result<Self> {
        let mut cur = DPartition::empty(shape.d());
        for b in &boxes {
            cur = cur.add_box(b)?;
        }
        if cur != shape {
            return Err(Error::InvalidParam(format!(
                "boxes fill {cur}, not {shape}"
            )));
        }
        Ok(StandardTableau { shape, boxes })
    }

    pub fn shape(&self) -> &DPartition {
        &self.shape
    }

    /// `boxes()[p - 1]` is the box holding `p`.
    pub fn boxes(&self) -> &[BoxCoord] {
        &self.boxes
    }

    /// The chain of shapes `λ[1] ⊂ ... ⊂ λ[n]`.
    pub fn shape_chain(&self) -> Vec<DPartition> {
        let mut cur = DPartition::empty(self.shape.d());
        self.boxes
            .iter()
            .map(|b| {
                cur = cur.add_box(b).expect("validated tableau");
                cur.clone()
            })
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.shape)?;
        for (i, b) in self.boxes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", b)?;
        }
        f.write_str("]")
    }
}

/// All standard tableaux of shape `shape`, grouped by the box holding `n`
/// (in removable-box order) and recursively.
pub fn enumerate_standard_tableaux(shape: &DPartition) -> Vec<StandardTableau> {
    fn rec(shape: &DPartition) -> Vec<Vec<BoxCoord>> {
        if shape.size() == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for b in shape.removable_boxes() {
            let smaller = shape.remove_box(&b).expect("removable box");
            for mut seq in rec(&smaller) {
                seq.push(b);
                out.push(seq);
            }
        }
        out
    }
    rec(shape)
        .into_iter()
        .map(|boxes| StandardTableau {
            shape: shape.clone(),
            boxes,
        })
        .collect()
}

/// A formal sum `Σ m_λ χ_λ` of irreducible characters of `G(d,1,n)` with
/// positive integer multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharacterSum {
    d: usize,
    n: u32,
    terms: BTreeMap<DPartition, u64>,
}

impl CharacterSum {
    pub fn zero(d: usize, n: u32) -> Self {
        CharacterSum {
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn irreducible(lambda: DPartition) -> Self {
        let mut s = CharacterSum::zero(lambda.d(), lambda.size());
        s.terms.insert(lambda, 1);
        s
    }

    pub fn from_terms(d: usize, n: u32, terms: impl IntoIterator<Item = (DPartition, u64)>) -> Result<Self> {
        let mut s = CharacterSum::zero(d, n);
        for (lambda, m) in terms {
            s.add(lambda, m)?;
        }
        Ok(s)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add(&mut self, lambda: DPartition, mult: u64) -> Result<()> {
        if lambda.d() != self.d || lambda.size() != self.n {
            return Err(Error::InvalidParam(format!(
                "{lambda} is not a {}-partition of {}",
                self.d, self.n
            )));
        }
        if mult > 0 {
            *self.terms.entry(lambda).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn add_sum(&mut self, other: &CharacterSum) {
        assert_eq!((self.d, self.n), (other.d, other.n));
        for (lambda, &m) in &other.terms {
            *self.terms.entry(lambda.clone()).or_insert(0) += m;
        }
    }

    pub fn multiplicity(&self, lambda: &DPartition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DPartition, u64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Σ m_λ dim V_λ`.
    pub fn degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(l, &m)| m * l.num_standard_tableaux())
            .sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|&m| m == 1)
    }
}

impl fmt::Display for CharacterSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, &m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{lambda}")?;
        }
        Ok(())
    }
}

impl Serialize for CharacterSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (lambda, m) in &self.terms {
            map.serialize_entry(&lambda.to_string(), m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for CharacterSum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (k, m) in raw {
            let lambda: DPartition = k.parse().map_err(D::Error::custom)?;
            terms.push((lambda, m));
        }
        let Some((first, _)) = terms.first() else {
            return Err(D::Error::custom("empty character sum carries no (d, n)"));
        };
        let (d, n) = (first.d(), first.size());
        CharacterSum::from_terms(d, n, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DPartition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_dpartitions(1, 0), vec![DPartition::empty(1)]);
        let got: Vec<String> = enumerate_dpartitions(2, 2).iter().map(|l| l.to_string()).collect();
        assert_eq!(got, ["2|∅", "1.1|∅", "1|1", "∅|2", "∅|1.1"]);
    }

    #[test]
    fn enumeration_is_sorted_in_canonical_order() {
        let all = enumerate_dpartitions(3, 4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn boxes_and_contents() {
        assert_eq!(dp("2|∅").removable_boxes(), vec![BoxCoord::new(1, 2, 1)]);
        assert_eq!(
            DPartition::empty(2).addable_boxes(),
            vec![BoxCoord::new(1, 1, 1), BoxCoord::new(1, 1, 2)]
        );
        assert_eq!(BoxCoord::new(1, 1, 2).content(), 0);
        assert_eq!(BoxCoord::new(1, 2, 1).content(), 1);
        assert_eq!(BoxCoord::new(3, 1, 2).content(), -2);
    }

    #[test]
    fn tableaux_counts() {
        assert_eq!(enumerate_standard_tableaux(&dp("1|1")).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&dp("2|∅")).len(), 1);
        assert_eq!(enumerate_standard_tableaux(&dp("2.1|∅")).len(), 2);
        let total: u64 = enumerate_dpartitions(2, 2)
            .iter()
            .map(|l| (enumerate_standard_tableaux(l).len() as u64).pow(2))
            .sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn tableau_validation_rejects_bad_order() {
        let shape = dp("2|∅");
        let bad = vec![BoxCoord::new(1, 2, 1), BoxCoord::new(1, 1, 1)];
        assert!(StandardTableau::new(shape.clone(), bad).is_err());
        let good = vec![BoxCoord::new(1, 1, 1), BoxCoord::new(1, 2, 1)];
        assert!(StandardTableau::new(shape, good).is_ok());
    }

    #[test]
    fn text_form_round_trip() {
        let l = dp("2.1|∅|1");
        assert_eq!(l.to_string(), "2.1|∅|1");
        assert_eq!(l.size(), 4);
        assert_eq!(dp("|1").to_string(), "∅|1");
        assert!("1.2|∅".parse::<DPartition>().is_err());
    }

    #[test]
    fn character_sum_json() {
        let mut s = CharacterSum::zero(2, 2);
        s.add(dp("1.1|∅"), 1).unwrap();
        s.add(dp("1|1"), 2).unwrap();
        assert_eq!(s.to_string(), "1.1|∅ + 2*1|1");
        let json = serde_json::to_string(&s).unwrap();
        let back: CharacterSum = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(s.add(dp("1|∅"), 1).is_err());
    }
}
