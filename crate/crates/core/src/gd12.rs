//! `G(d,1,2)`: closed forms of the Calogero-Moser cellular characters and
//! an exact check of the Gaudin operator matrices they come from.
//!
//! Irreducible characters of `G(d,1,2)` are labelled `χ_i` (the
//! 2-partition `(2)` in component `i`), `χ'_i` (`(1,1)` in component `i`)
//! and `χ_{i,j}`, `i < j` (`(1)` in components `i` and `j`). The two
//! dimensional representation `ρ_{i,j}` restricted to the Gaudin algebra
//! is described by the `2×2` matrices of `D'_x`, `D'_y` over
//! `Q(ζ_d)[X^±1, Y^±1]`, with `A_i = (X^d - Y^d) k#_i` and `m = j - i`:
//!
//! ```text
//! D'_x = [ A_i               -c0 X^(d-m) Y^m ]   D'_y = [ A_j              c0 X^(d-m) Y^m ]
//!        [ -c0 X^m Y^(d-m)   A_j             ]          [ c0 X^m Y^(d-m)   A_i            ]
//! ```

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{CharacterSum, DPartition, Partition};
use crate::cyclotomic::{BivariatePoly, CycloElem};
use crate::error::{Error, Result};
use crate::jm::CMParams;
use crate::qlaurent::{rational, Rational};

fn one_hot(d: usize, entries: &[(usize, &[u32])]) -> DPartition {
    let mut comps = vec![Partition::empty(); d];
    for &(i, parts) in entries {
        comps[i - 1] = Partition::new(parts.to_vec()).expect("valid partition");
    }
    DPartition::new(comps).expect("d >= 1")
}

/// `χ_i`: the partition `(2)` in component `i`.
pub fn chi(d: usize, i: usize) -> DPartition {
    one_hot(d, &[(i, &[2])])
}

/// `χ'_i`: the partition `(1,1)` in component `i`.
pub fn chi_prime(d: usize, i: usize) -> DPartition {
    one_hot(d, &[(i, &[1, 1])])
}

/// `χ_{i,j}` for `i ≠ j`: a box in components `i` and `j`.
pub fn chi_pair(d: usize, i: usize, j: usize) -> DPartition {
    assert_ne!(i, j);
    one_hot(d, &[(i.min(j), &[1]), (i.max(j), &[1])])
}

/// Classes of `i ~ j ⟺ k#_i = k#_j`, 1-based, ordered by first element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivClasses {
    pub blocks: Vec<Vec<usize>>,
}

impl EquivClasses {
    pub fn class_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&i))
            .expect("classes cover 1..=d")
    }
}

pub fn sim_classes(p: &CMParams) -> EquivClasses {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 1..=p.d() {
        match blocks.iter_mut().find(|b| p.ksharp(b[0]) == p.ksharp(i)) {
            Some(b) => b.push(i),
            None => blocks.push(vec![i]),
        }
    }
    EquivClasses { blocks }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCell {
    /// Which class of simple modules the character belongs to, e.g.
    /// `L{1,2}`, `L'{3}`, `L{1},{2}` or `L+{1,2}`.
    pub label: String,
    pub character: CharacterSum,
}

/// One character per class of simple modules of the Gaudin algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmCellsN2 {
    pub params: CMParams,
    pub classes: EquivClasses,
    pub family: Vec<CmCell>,
}

impl CmCellsN2 {
    pub fn set(&self) -> BTreeSet<CharacterSum> {
        self.family.iter().map(|c| c.character.clone()).collect()
    }

    /// Total multiplicity of each irreducible over the whole family.
    pub fn total(&self) -> CharacterSum {
        let d = self.params.d();
        let mut acc = CharacterSum::zero(d, 2);
        for c in &self.family {
            acc.add_sum(&c.character);
        }
        acc
    }
}

fn fmt_class(b: &[usize]) -> String {
    let s: Vec<String> = b.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", s.join(","))
}

pub fn cm_cells_n2(p: &CMParams) -> CmCellsN2 {
    let d = p.d();
    let classes = sim_classes(p);
    let blocks = &classes.blocks;
    let c0 = p.c0();
    let mut family = Vec::new();
    let mut push = |label: String, terms: Vec<(DPartition, u64)>| {
        let character = CharacterSum::from_terms(d, 2, terms).expect("size 2");
        family.push(CmCell { label, character });
    };
    let cross = |a: &[usize], b: &[usize]| -> Vec<(DPartition, u64)> {
        a.iter()
            .flat_map(|&i| b.iter().map(move |&j| (chi_pair(d, i, j), 1)))
            .collect()
    };
    let inner = |a: &[usize], mult: u64| -> Vec<(DPartition, u64)> {
        let mut v = Vec::new();
        for (x, &i) in a.iter().enumerate() {
            for &j in &a[x + 1..] {
                v.push((chi_pair(d, i, j), mult));
            }
        }
        v
    };
    let diff = |a: &[usize], b: &[usize]| p.ksharp(a[0]) - p.ksharp(b[0]);

    if c0.is_zero() {
        for o in blocks {
            let mut t: Vec<_> = o
                .iter()
                .flat_map(|&i| [(chi(d, i), 1), (chi_prime(d, i), 1)])
                .collect();
            t.extend(inner(o, 2));
            push(format!("L{},{}", fmt_class(o), fmt_class(o)), t);
        }
        for o in blocks {
            for o2 in blocks {
                if o != o2 {
                    push(format!("L{},{}", fmt_class(o), fmt_class(o2)), cross(o, o2));
                }
            }
        }
        return CmCellsN2 {
            params: p.clone(),
            classes,
            family,
        };
    }

    let neg_c0 = -c0.clone();
    for o in blocks {
        let mut t: Vec<_> = o.iter().map(|&i| (chi(d, i), 1)).collect();
        if let Some(o2) = blocks.iter().find(|o2| diff(o, o2) == *c0) {
            t.extend(cross(o, o2));
        }
        push(format!("L{}", fmt_class(o)), t);

        let mut t: Vec<_> = o.iter().map(|&i| (chi_prime(d, i), 1)).collect();
        if let Some(o2) = blocks.iter().find(|o2| diff(o, o2) == neg_c0) {
            t.extend(cross(o, o2));
        }
        push(format!("L'{}", fmt_class(o)), t);
    }
    let c0sq = c0 * c0;
    for (x, o) in blocks.iter().enumerate() {
        for o2 in &blocks[x + 1..] {
            let dk = diff(o, o2);
            if &dk * &dk != c0sq {
                push(format!("L{},{}", fmt_class(o), fmt_class(o2)), cross(o, o2));
            }
        }
    }
    for o in blocks.iter().filter(|o| o.len() >= 2) {
        if d.is_multiple_of(2) {
            push(format!("L+{}", fmt_class(o)), inner(o, 1));
            push(format!("L-{}", fmt_class(o)), inner(o, 1));
        } else {
            push(format!("L{},{}", fmt_class(o), fmt_class(o)), inner(o, 1));
        }
    }
    CmCellsN2 {
        params: p.clone(),
        classes,
        family,
    }
}

/// Number of composition factors of the restriction of each irreducible
/// to the Gaudin algebra: `1` for `χ_i`, `χ'_i`; `2` for `χ_{i,j}` when
/// `ρ_{i,j}` splits.
pub fn restriction_lengths(p: &CMParams) -> CharacterSum {
    let d = p.d();
    let c0 = p.c0();
    let mut acc = CharacterSum::zero(d, 2);
    for i in 1..=d {
        acc.add(chi(d, i), 1).expect("size 2");
        acc.add(chi_prime(d, i), 1).expect("size 2");
        for j in i + 1..=d {
            let dk = p.ksharp(i) - p.ksharp(j);
            let splits = c0.is_zero()
                || (dk.is_zero() && d.is_multiple_of(2))
                || &dk * &dk == c0 * c0;
            acc.add(chi_pair(d, i, j), if splits { 2 } else { 1 })
                .expect("size 2");
        }
    }
    acc
}

fn zeta_poly(d: u32, k: i64) -> BivariatePoly {
    BivariatePoly::monomial(CycloElem::zeta_pow(d, k), 0, 0)
}

/// `Σ_k ζ^{kl} Π_{k'≠k} (X - ζ^{k'} Y) - d X^{l-1} Y^{d-l}`.
pub fn frac_identity_residual(d: u32, l: u32) -> BivariatePoly {
    assert!(d >= 1 && (1..=d).contains(&l), "need 1 <= l <= d");
    let x = BivariatePoly::x(d);
    let y = BivariatePoly::y(d);
    let mut lhs = BivariatePoly::zero(d);
    for k in 0..d as i64 {
        let mut prod = zeta_poly(d, k * l as i64);
        for k2 in (0..d as i64).filter(|&k2| k2 != k) {
            let factor = &x - &(&zeta_poly(d, k2) * &y);
            prod = &prod * &factor;
        }
        lhs = &lhs + &prod;
    }
    let rhs = BivariatePoly::rational_monomial(
        d,
        rational(d as i64),
        l as i32 - 1,
        (d - l) as i32,
    );
    &lhs - &rhs
}

/// The partial fraction identity cleared of denominators.
pub fn verify_frac_identity(d: u32, l: u32) -> bool {
    frac_identity_residual(d, l).is_zero()
}

pub type Matrix2 = [[BivariatePoly; 2]; 2];

fn mat_vec(m: &Matrix2, v: &[BivariatePoly; 2]) -> [BivariatePoly; 2] {
    [
        &(&m[0][0] * &v[0]) + &(&m[0][1] * &v[1]),
        &(&m[1][0] * &v[0]) + &(&m[1][1] * &v[1]),
    ]
}

fn trace(m: &Matrix2) -> BivariatePoly {
    &m[0][0] + &m[1][1]
}

fn det(m: &Matrix2) -> BivariatePoly {
    &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
}

/// Matrices of `D'_x` and `D'_y` on `ρ_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaudinMatrixPair {
    pub d: u32,
    pub i: usize,
    pub j: usize,
    pub dx: Matrix2,
    pub dy: Matrix2,
}

struct Ring {
    d: u32,
}

impl Ring {
    fn c(&self, r: &Rational) -> BivariatePoly {
        BivariatePoly::constant(self.d, r.clone())
    }

    fn mono(&self, r: &Rational, a: i32, b: i32) -> BivariatePoly {
        BivariatePoly::rational_monomial(self.d, r.clone(), a, b)
    }

    fn xd_minus_yd(&self) -> BivariatePoly {
        let d = self.d as i32;
        &self.mono(&Rational::one(), d, 0) - &self.mono(&Rational::one(), 0, d)
    }

    /// `a X^d + b Y^d`.
    fn lin(&self, a: &Rational, b: &Rational) -> BivariatePoly {
        let d = self.d as i32;
        &self.mono(a, d, 0) + &self.mono(b, 0, d)
    }
}

pub fn gaudin_matrices(p: &CMParams, i: usize, j: usize) -> Result<GaudinMatrixPair> {
    let d = p.d();
    if !(1 <= i && i < j && j <= d) {
        return Err(Error::InvalidParam(format!(
            "need 1 <= i < j <= d, got i={i}, j={j}, d={d}"
        )));
    }
    let ring = Ring { d: d as u32 };
    let di = d as i32;
    let m = (j - i) as i32;
    let xy = ring.xd_minus_yd();
    let a_i = &xy * &ring.c(p.ksharp(i));
    let a_j = &xy * &ring.c(p.ksharp(j));
    let c0 = p.c0();
    let neg_c0 = -c0.clone();
    let dx = [
        [a_i.clone(), ring.mono(&neg_c0, di - m, m)],
        [ring.mono(&neg_c0, m, di - m), a_j.clone()],
    ];
    let dy = [
        [a_j, ring.mono(c0, di - m, m)],
        [ring.mono(c0, m, di - m), a_i],
    ];
    Ok(GaudinMatrixPair {
        d: d as u32,
        i,
        j,
        dx,
        dy,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaudinRegime {
    /// `c0 = 0`: both matrices diagonal.
    Diagonal,
    /// `k#_i = k#_j`, `d` even: `ρ_{i,j} ≅ L^+ ⊕ L^-`.
    EqualEven,
    /// `k#_i - k#_j = c0`: `ρ_{i,j} ≅ L_i ⊕ L'_j`.
    PlusC0,
    /// `k#_i - k#_j = -c0`: `ρ_{i,j} ≅ L'_i ⊕ L_j`.
    MinusC0,
    /// No invariant line.
    Irreducible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub check: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaudinReport {
    pub d: u32,
    pub i: usize,
    pub j: usize,
    pub regime: GaudinRegime,
    pub discriminant_is_square: bool,
    /// Every entry must read `"0"`.
    pub residuals: Vec<Residual>,
    pub passed: bool,
}

impl GaudinReport {
    pub fn nonzero_residuals(&self) -> impl Iterator<Item = &Residual> {
        self.residuals.iter().filter(|r| r.value != "0")
    }
}

/// Whether `a X^{2d} + b X^d Y^d + a Y^{2d}` is a square in `C(X,Y)`.
fn symmetric_quadratic_is_square(d: u32, a: &Rational, b: &Rational) -> bool {
    if a.is_zero() {
        b.is_zero() || d.is_multiple_of(2)
    } else {
        b * b == rational(4) * a * a
    }
}

/// Builds the matrix pair for `ρ_{i,j}` and checks, as exact identities:
/// equal traces and determinants, the characteristic polynomial, the
/// discriminant, and in every split regime the eigenvectors together
/// with their eigenvalues and the matching one-dimensional modules.
///
/// Fails with `RegimeMismatch` when the square test on the discriminant
/// disagrees with the regime read off the parameters.
pub fn verify_gaudin_eigensystem(p: &CMParams, i: usize, j: usize) -> Result<GaudinReport> {
    let pair = gaudin_matrices(p, i, j)?;
    let d = pair.d;
    let di = d as i32;
    let ring = Ring { d };
    let ki = p.ksharp(i).clone();
    let kj = p.ksharp(j).clone();
    let c0 = p.c0().clone();
    let xy = ring.xd_minus_yd();
    let half = |e: i32| ring.mono(&Rational::one(), e, 0);
    let mut residuals = Vec::new();
    let mut record = |check: &str, v: BivariatePoly| {
        residuals.push(Residual {
            check: check.to_string(),
            value: v.to_string(),
        })
    };

    let (tx, ty) = (trace(&pair.dx), trace(&pair.dy));
    let (detx, dety) = (det(&pair.dx), det(&pair.dy));
    record("trace(D'x) - trace(D'y)", &tx - &ty);
    record("det(D'x) - det(D'y)", &detx - &dety);
    let want_trace = &xy * &ring.c(&(&ki + &kj));
    record("trace - (X^d-Y^d)(ki+kj)", &tx - &want_trace);
    let want_det = &(&(&xy * &xy) * &ring.c(&(&ki * &kj))) - &ring.mono(&(&c0 * &c0), di, di);
    record("det - ((X^d-Y^d)^2 ki kj - c0^2 X^d Y^d)", &detx - &want_det);

    let dk = &ki - &kj;
    let a = &dk * &dk;
    let b = rational(2) * (rational(2) * &c0 * &c0 - &a);
    let disc = &(&tx * &tx) - &(&ring.c(&rational(4)) * &detx);
    let want_disc = &(&ring.mono(&a, 2 * di, 0) + &ring.mono(&b, di, di)) + &ring.mono(&a, 0, 2 * di);
    record("discriminant - symmetric form", &disc - &want_disc);
    let square = symmetric_quadratic_is_square(d, &a, &b);

    let regime = if c0.is_zero() {
        GaudinRegime::Diagonal
    } else if dk.is_zero() && d % 2 == 0 {
        GaudinRegime::EqualEven
    } else if dk == c0 {
        GaudinRegime::PlusC0
    } else if dk == -c0.clone() {
        GaudinRegime::MinusC0
    } else {
        GaudinRegime::Irreducible
    };
    if square != (regime != GaudinRegime::Irreducible) {
        return Err(Error::RegimeMismatch(format!(
            "d={d}, (i,j)=({i},{j}), {p}: regime {regime:?} but discriminant square test says {square}"
        )));
    }

    let one = Rational::one();
    let m = (j - i) as i32;
    let a_i = &xy * &ring.c(&ki);
    let a_j = &xy * &ring.c(&kj);
    let l_x = |k: &Rational| &(&xy * &ring.c(k)) - &ring.mono(&c0, di, 0);
    let l_y = |k: &Rational| &(&xy * &ring.c(k)) + &ring.mono(&c0, 0, di);
    let lp_x = |k: &Rational| &(&xy * &ring.c(k)) + &ring.mono(&c0, di, 0);
    let lp_y = |k: &Rational| &(&xy * &ring.c(k)) - &ring.mono(&c0, 0, di);
    let neg_one = -one.clone();

    // (vector, eigenvalue of D'x, eigenvalue of D'y, one-dimensional module)
    type Pair = ([BivariatePoly; 2], BivariatePoly, BivariatePoly, Option<(String, BivariatePoly, BivariatePoly)>);
    let mut eigen: Vec<Pair> = Vec::new();
    match regime {
        GaudinRegime::Diagonal => {
            let zero = BivariatePoly::zero(d);
            let unit = ring.c(&one);
            eigen.push(([unit.clone(), zero.clone()], a_i.clone(), a_j.clone(), None));
            eigen.push(([zero, unit], a_j.clone(), a_i.clone(), None));
        }
        GaudinRegime::EqualEven => {
            let e = di / 2 - m;
            let mid = ring.mono(&c0, di / 2, di / 2);
            let v_minus = [half(e), ring.mono(&neg_one, 0, e)];
            let v_plus = [half(e), ring.mono(&one, 0, e)];
            eigen.push((v_minus, &a_i + &mid, &a_i - &mid, None));
            eigen.push((v_plus, &a_i - &mid, &a_i + &mid, None));
        }
        GaudinRegime::PlusC0 | GaudinRegime::MinusC0 => {
            let lam1 = ring.lin(&kj, &-ki.clone());
            let lam2 = ring.lin(&ki, &-kj.clone());
            let plus = regime == GaudinRegime::PlusC0;
            let sign = if plus { one.clone() } else { neg_one.clone() };
            let v1 = [ring.mono(&one, 0, m), ring.mono(&sign, m, 0)];
            let v2 = [ring.mono(&one, di - m, 0), ring.mono(&-sign, 0, di - m)];
            let (m1, m2) = if plus {
                (
                    (format!("L_{i}"), l_x(&ki), l_y(&ki)),
                    (format!("L'_{j}"), lp_x(&kj), lp_y(&kj)),
                )
            } else {
                (
                    (format!("L'_{i}"), lp_x(&ki), lp_y(&ki)),
                    (format!("L_{j}"), l_x(&kj), l_y(&kj)),
                )
            };
            eigen.push((v1, lam1.clone(), lam2.clone(), Some(m1)));
            eigen.push((v2, lam2, lam1, Some(m2)));
        }
        GaudinRegime::Irreducible => {}
    }
    if let [(v1, ..), (v2, ..)] = eigen.as_slice() {
        let basis_det = &(&v1[0] * &v2[1]) - &(&v1[1] * &v2[0]);
        if basis_det.is_zero() {
            record("eigenvectors independent", ring.c(&one));
        }
    }
    for (n, (v, lx, ly, module)) in eigen.iter().enumerate() {
        for (name, mat, lam) in [("D'x", &pair.dx, lx), ("D'y", &pair.dy, ly)] {
            let mv = mat_vec(mat, v);
            for c in 0..2 {
                record(
                    &format!("{name} v{} - lambda v{}, row {}", n + 1, n + 1, c + 1),
                    &mv[c] - &(lam * &v[c]),
                );
            }
        }
        if let Some((label, mx, my)) = module {
            record(&format!("eigenvalue of D'x on v{} - {label}", n + 1), lx - mx);
            record(&format!("eigenvalue of D'y on v{} - {label}", n + 1), ly - my);
        }
    }
    let passed = residuals.iter().all(|r| r.value == "0");
    Ok(GaudinReport {
        d,
        i,
        j,
        regime,
        discriminant_is_square: square,
        residuals,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_strings(s: &BTreeSet<CharacterSum>) -> BTreeSet<String> {
        s.iter().map(|c| c.to_string()).collect()
    }

    fn strs(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn classes() {
        let c = sim_classes(&CMParams::from_ksharp_ints(1, &[-1, 0]));
        assert_eq!(c.blocks, vec![vec![1], vec![2]]);
        let c = sim_classes(&CMParams::from_ksharp_ints(1, &[0, 0]));
        assert_eq!(c.blocks, vec![vec![1, 2]]);
        let c = sim_classes(&CMParams::from_ksharp_ints(1, &[0, 0, -1, -1]));
        assert_eq!(c.blocks, vec![vec![1, 2], vec![3, 4]]);
    }

    #[test]
    fn cells_b2() {
        let cells = cm_cells_n2(&CMParams::from_ksharp_ints(1, &[-1, 0]));
        assert_eq!(
            set_strings(&cells.set()),
            strs(&["2|∅", "1.1|∅ + 1|1", "1|1 + ∅|2", "∅|1.1"])
        );
        let cells = cm_cells_n2(&CMParams::from_ksharp_ints(1, &[0, 0]));
        assert_eq!(
            set_strings(&cells.set()),
            strs(&["2|∅ + ∅|2", "1.1|∅ + ∅|1.1", "1|1"])
        );
        assert_eq!(cells.family.len(), 4);
        let cells = cm_cells_n2(&CMParams::from_ksharp_ints(0, &[0, 0]));
        assert_eq!(
            set_strings(&cells.set()),
            strs(&["2|∅ + 1.1|∅ + 2*1|1 + ∅|2 + ∅|1.1"])
        );
    }

    #[test]
    fn family_totals_match_restrictions() {
        for c0 in [0, 1, 2] {
            for ks in [[0, 0, 0, 0], [0, -1, -1, -2], [0, 0, -2, -2], [-3, 0, -1, 0]] {
                let p = CMParams::from_ksharp_ints(c0, &ks);
                assert_eq!(cm_cells_n2(&p).total(), restriction_lengths(&p), "{p}");
                let p3 = CMParams::from_ksharp_ints(c0, &ks[..3]);
                assert_eq!(cm_cells_n2(&p3).total(), restriction_lengths(&p3), "{p3}");
            }
        }
    }

    #[test]
    fn frac_identity() {
        assert!(verify_frac_identity(1, 1));
        assert!(verify_frac_identity(2, 1));
        assert!(verify_frac_identity(4, 3));
        assert!(verify_frac_identity(3, 2));
        assert!(frac_identity_residual(5, 5).is_zero());
    }

    #[test]
    fn gaudin_b2_plus_c0() {
        // k#_1 - k#_2 = -1 = -c0 for (c0; k#) = (1; -1, 0)
        let r = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(1, &[-1, 0]), 1, 2).unwrap();
        assert_eq!(r.regime, GaudinRegime::MinusC0);
        assert!(r.passed, "{:?}", r.nonzero_residuals().collect::<Vec<_>>());
        let r = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(1, &[0, -1]), 1, 2).unwrap();
        assert_eq!(r.regime, GaudinRegime::PlusC0);
        assert!(r.passed);
    }

    #[test]
    fn gaudin_equal_even() {
        let r = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(1, &[0, 0]), 1, 2).unwrap();
        assert_eq!(r.regime, GaudinRegime::EqualEven);
        assert!(r.passed);
        let r = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(3, &[1, 1, 1, 1]), 1, 4).unwrap();
        assert!(r.passed);
    }

    #[test]
    fn gaudin_irreducible_and_diagonal() {
        let r = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(1, &[0, 0, 0]), 1, 2).unwrap();
        assert_eq!(r.regime, GaudinRegime::Irreducible);
        assert!(!r.discriminant_is_square && r.passed);
        let r = verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(0, &[0, 5, 2]), 2, 3).unwrap();
        assert_eq!(r.regime, GaudinRegime::Diagonal);
        assert!(r.passed);
        assert!(verify_gaudin_eigensystem(&CMParams::from_ksharp_ints(1, &[0, 0]), 2, 1).is_err());
    }
}
