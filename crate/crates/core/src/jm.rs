//! Jucys-Murphy spectra of `G(d,1,n)` and the cellular characters of the
//! commutative subalgebra they generate.
//!
//! `J_k` acts on the line of a standard tableau `t` by
//! `d·(k#_c - c0·(b - a))` where `(a, b, c)` is the box of `t` holding `k`.
//! Grouping tableaux by their eigenvalue vectors yields the JM cells. Each
//! JM cell is a sum of Calogero-Moser cellular characters; for generic
//! parameters both families consist of the irreducible characters.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    enumerate_dpartitions, enumerate_standard_tableaux, BoxCoord, CharacterSum, DPartition,
    StandardTableau,
};
use crate::error::{Error, Result};
use crate::qlaurent::{rational, rational_str, rational_vec_str, Rational};

/// Reflection parameters `(c0; k_0, ..., k_{d-1})`, indices of `k` read
/// modulo `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CMParams {
    #[serde(with = "rational_str")]
    c0: Rational,
    #[serde(with = "rational_vec_str")]
    k: Vec<Rational>,
}

impl CMParams {
    pub fn new(c0: Rational, k: Vec<Rational>) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::InvalidParam("need d >= 1 parameters k_i".into()));
        }
        Ok(CMParams { c0, k })
    }

    /// Builds from `k#_1, ..., k#_d` where `k#_i = k_{1-i}`.
    pub fn from_ksharp(c0: Rational, ksharp: Vec<Rational>) -> Result<Self> {
        let d = ksharp.len();
        if d == 0 {
            return Err(Error::InvalidParam("need d >= 1 parameters k#_i".into()));
        }
        let mut k = vec![Rational::zero(); d];
        for (i0, v) in ksharp.into_iter().enumerate() {
            k[Self::k_index_of_sharp(d, i0 + 1)] = v;
        }
        Ok(CMParams { c0, k })
    }

    /// Integer shorthand for tests and examples.
    pub fn from_ksharp_ints(c0: i64, ksharp: &[i64]) -> Self {
        Self::from_ksharp(rational(c0), ksharp.iter().map(|&x| rational(x)).collect())
            .expect("d >= 1")
    }

    fn k_index_of_sharp(d: usize, i: usize) -> usize {
        (1 - i as i64).rem_euclid(d as i64) as usize
    }

    pub fn d(&self) -> usize {
        self.k.len()
    }

    pub fn c0(&self) -> &Rational {
        &self.c0
    }

    /// `k_i`, `i` taken modulo `d`.
    pub fn k(&self, i: i64) -> &Rational {
        &self.k[i.rem_euclid(self.d() as i64) as usize]
    }

    /// `k#_i = k_{1-i}` for `i` in `1..=d`.
    pub fn ksharp(&self, i: usize) -> &Rational {
        &self.k[Self::k_index_of_sharp(self.d(), i)]
    }

    pub fn ksharp_vec(&self) -> Vec<Rational> {
        (1..=self.d()).map(|i| self.ksharp(i).clone()).collect()
    }

    /// Multiplies `c0` and every `k_i` by `t`.
    pub fn scaled(&self, t: &Rational) -> CMParams {
        CMParams {
            c0: &self.c0 * t,
            k: self.k.iter().map(|x| x * t).collect(),
        }
    }

    /// Adds `t` to every `k_i`.
    pub fn k_shifted(&self, t: &Rational) -> CMParams {
        CMParams {
            c0: self.c0.clone(),
            k: self.k.iter().map(|x| x + t).collect(),
        }
    }
}

impl fmt::Display for CMParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.ksharp_vec().iter().map(|x| x.to_string()).collect();
        write!(f, "c0={} k#=({})", self.c0, ks.join(","))
    }
}

/// Eigenvalues of `J_1, ..., J_n` on one tableau line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EigenvalueVector(#[serde(with = "rational_vec_str")] pub Vec<Rational>);

impl fmt::Display for EigenvalueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

pub fn jm_eigenvalue(p: &CMParams, b: &BoxCoord) -> Rational {
    let d = rational(p.d() as i64);
    d * (p.ksharp(b.comp) - p.c0() * rational(b.content()))
}

pub fn tableau_spectrum(p: &CMParams, t: &StandardTableau) -> EigenvalueVector {
    EigenvalueVector(t.boxes().iter().map(|b| jm_eigenvalue(p, b)).collect())
}

/// Scalar by which the Euler element `eu_{c,n}` acts on `V_λ`:
/// `d·Σ_j k_{-j}|λ^{(j+1)}| - d·c0·Σ cont`.
pub fn euler_value(p: &CMParams, lambda: &DPartition) -> Rational {
    let d = p.d() as i64;
    let mut acc = Rational::zero();
    for j in 0..d {
        acc += p.k(-j) * rational(lambda.component(j as usize + 1).size() as i64);
    }
    rational(d) * (acc - p.c0() * rational(lambda.content_sum()))
}

/// A hyperplane `(k_p - k_q) - c0·j = 0` (or `c0 = 0`) containing the
/// parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenericityWitness {
    ZeroC0,
    /// `p`, `q` are indices of `k` in `0..d`.
    Hyperplane { p: usize, q: usize, j: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub generic: bool,
    pub witness: Option<GenericityWitness>,
}

/// Tests `c0 ≠ 0` and `(k_p - k_q) - c0·j ≠ 0` for `p ≠ q`, `|j| < n`.
pub fn is_generic(p: &CMParams, n: u32) -> GenericityReport {
    if p.c0().is_zero() {
        return GenericityReport {
            generic: false,
            witness: Some(GenericityWitness::ZeroC0),
        };
    }
    let d = p.d();
    let n = n as i64;
    for a in 0..d {
        for b in 0..d {
            if a == b {
                continue;
            }
            let diff = p.k(a as i64) - p.k(b as i64);
            let j = &diff / p.c0();
            if j.is_integer() && j.abs() < rational(n) {
                let j: i64 = j.to_integer().try_into().expect("|j| < n");
                return GenericityReport {
                    generic: false,
                    witness: Some(GenericityWitness::Hyperplane { p: a, q: b, j }),
                };
            }
        }
    }
    GenericityReport {
        generic: true,
        witness: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JmCell {
    pub spectrum: EigenvalueVector,
    pub character: CharacterSum,
}

/// JM cells: equal to the Calogero-Moser cells when the parameter is
/// generic, unions of them otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDecomposition {
    pub d: usize,
    pub n: u32,
    pub cells: Vec<JmCell>,
    pub generic: bool,
    pub witness: Option<GenericityWitness>,
}

impl CellDecomposition {
    pub fn characters(&self) -> impl Iterator<Item = &CharacterSum> {
        self.cells.iter().map(|c| &c.character)
    }
}

/// Groups all standard tableaux of all shapes of size `n` by spectrum.
/// Cells are ordered by spectrum.
pub fn jm_cellular_characters(p: &CMParams, n: u32) -> CellDecomposition {
    let d = p.d();
    let mut groups: BTreeMap<EigenvalueVector, CharacterSum> = BTreeMap::new();
    for lambda in enumerate_dpartitions(d, n) {
        for t in enumerate_standard_tableaux(&lambda) {
            let spec = tableau_spectrum(p, &t);
            groups
                .entry(spec)
                .or_insert_with(|| CharacterSum::zero(d, n))
                .add(lambda.clone(), 1)
                .expect("shape of the right size");
        }
    }
    let report = is_generic(p, n);
    CellDecomposition {
        d,
        n,
        cells: groups
            .into_iter()
            .map(|(spectrum, character)| JmCell {
                spectrum,
                character,
            })
            .collect(),
        generic: report.generic,
        witness: report.witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DPartition {
        s.parse().unwrap()
    }

    fn ev(v: &[i64]) -> EigenvalueVector {
        EigenvalueVector(v.iter().map(|&x| rational(x)).collect())
    }

    #[test]
    fn ksharp_indexing() {
        let p = CMParams::from_ksharp_ints(1, &[-1, 0]);
        assert_eq!(*p.ksharp(1), rational(-1));
        assert_eq!(*p.k(0), rational(-1));
        assert_eq!(*p.k(1), rational(0));
        assert_eq!(*p.k(-1), rational(0));
        let p = CMParams::from_ksharp_ints(1, &[5, 6, 7]);
        // k#_2 = k_{-1} = k_2
        assert_eq!(*p.k(2), rational(6));
        assert_eq!(*p.k(1), rational(7));
    }

    #[test]
    fn eigenvalue_examples() {
        let p = CMParams::from_ksharp_ints(1, &[-1, 0]);
        assert_eq!(jm_eigenvalue(&p, &BoxCoord::new(1, 1, 1)), rational(-2));
        assert_eq!(jm_eigenvalue(&p, &BoxCoord::new(1, 1, 2)), rational(0));
        let t = &enumerate_standard_tableaux(&dp("2|∅"))[0];
        assert_eq!(tableau_spectrum(&p, t), ev(&[-2, -4]));
        let ts = enumerate_standard_tableaux(&dp("1|1"));
        let first_comp1 = ts.iter().find(|t| t.boxes()[0].comp == 1).unwrap();
        assert_eq!(tableau_spectrum(&p, first_comp1), ev(&[-2, 0]));
    }

    #[test]
    fn euler_examples() {
        let p = CMParams::from_ksharp_ints(1, &[-1, 0]);
        assert_eq!(euler_value(&p, &DPartition::empty(2)), rational(0));
        assert_eq!(euler_value(&p, &dp("1|1")), rational(-2));
        // d = 1: eu acts on (n) by -c0·Σ cont = -c0·n(n-1)/2
        let p1 = CMParams::from_ksharp_ints(3, &[0]);
        assert_eq!(euler_value(&p1, &dp("3")), rational(-9));
    }

    #[test]
    fn genericity_examples() {
        let r = is_generic(&CMParams::from_ksharp_ints(1, &[-1, 0]), 2);
        assert!(!r.generic);
        let Some(GenericityWitness::Hyperplane { p, q, j }) = r.witness else { panic!() };
        let params = CMParams::from_ksharp_ints(1, &[-1, 0]);
        assert_eq!(params.k(p as i64) - params.k(q as i64), rational(j));
        assert!(is_generic(&CMParams::from_ksharp_ints(1, &[-14, -7, 0]), 3).generic);
        let r = is_generic(&CMParams::from_ksharp_ints(0, &[-14, -7, 0]), 3);
        assert_eq!(r.witness, Some(GenericityWitness::ZeroC0));
    }

    #[test]
    fn cells_for_type_b2() {
        let p = CMParams::from_ksharp_ints(1, &[-1, 0]);
        let dec = jm_cellular_characters(&p, 2);
        let got: Vec<String> = dec.characters().map(|c| c.to_string()).collect();
        // ordered by spectrum: (-2,-4), (-2,0), (0,-2), (0,2)
        assert_eq!(got, ["2|∅", "1.1|∅ + 1|1", "1|1 + ∅|2", "∅|1.1"]);
        assert!(!dec.generic);
    }

    #[test]
    fn degenerate_parameters_give_one_cell() {
        let p = CMParams::from_ksharp_ints(0, &[3, 3, 3]);
        let dec = jm_cellular_characters(&p, 3);
        assert_eq!(dec.cells.len(), 1);
        assert_eq!(dec.cells[0].character.degree(), 27 * 6);
    }

    #[test]
    fn generic_cells_are_irreducible() {
        let p = CMParams::from_ksharp_ints(1, &[-14, -7, 0]);
        let dec = jm_cellular_characters(&p, 3);
        assert!(dec.generic);
        // one cell per tableau, each carrying the character of its shape
        let tableaux: u64 = enumerate_dpartitions(3, 3)
            .iter()
            .map(DPartition::num_standard_tableaux)
            .sum();
        assert_eq!(dec.cells.len() as u64, tableaux);
        let distinct: std::collections::BTreeSet<_> = dec.characters().collect();
        assert_eq!(distinct.len(), enumerate_dpartitions(3, 3).len());
        assert!(dec.characters().all(|c| c.num_terms() == 1));
    }
}
