//! The level-`d` Fock space `F(Λ_r) = V(Λ_{r_1}) ⊗ ... ⊗ V(Λ_{r_d})` of
//! `U_q(sl_∞)`, its canonical basis and the constructible characters read
//! off at `q = 1`.
//!
//! The Chevalley generators act through the coproduct
//! `Δ(F) = F ⊗ K + 1 ⊗ F`, `Δ(E) = E ⊗ 1 + K^{-1} ⊗ E`: `F_m` moving bead
//! `m → m+1` in row `j` picks up `q^N`, `N = Σ_{l>j} ε_m(row l)`, where
//! `ε_m = +1` if `m ∈ β, m+1 ∉ β`, `-1` if `m ∉ β, m+1 ∈ β` and `0`
//! otherwise.
//!
//! The canonical basis is computed in two stages. A bar-invariant vector
//! `A_Σ` is built as a monomial in divided powers of the `F_m` applied to
//! the highest weight vector, with the monomial read off by peeling beads
//! from `Σ`. Then bar-invariant multiples of already computed basis
//! vectors are subtracted until every coefficient other than the one of
//! `Σ` lies in `qZ[q]`.
//!
//! Standard symbols (the index set of the canonical basis of the highest
//! weight submodule) are the vertices of the crystal component of `S^0`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_dpartitions, CharacterSum, DPartition};
use crate::error::{Error, Result};
use crate::qlaurent::{q_factorial, LaurentPoly};
use crate::symbol::{ChargeVector, Symbol};

/// A finite `Z[q, q^-1]`-combination of standard basis vectors `v_S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockVector {
    charges: ChargeVector,
    terms: BTreeMap<DPartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(charges: ChargeVector) -> Self {
        FockVector {
            charges,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(s: &Symbol) -> Self {
        let mut v = FockVector::zero(s.charges().clone());
        v.add_term(s.dpartition().clone(), LaurentPoly::one());
        v
    }

    pub fn highest_weight(charges: &ChargeVector) -> Self {
        Self::basis(&Symbol::empty(charges.clone()))
    }

    pub fn charges(&self) -> &ChargeVector {
        &self.charges
    }

    pub fn add_term(&mut self, dp: DPartition, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(dp).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dp: &DPartition) -> LaurentPoly {
        self.terms.get(dp).cloned().unwrap_or_default()
    }

    /// `(d-partition of the symbol, coefficient)` in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&DPartition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn symbol(&self, dp: &DPartition) -> Symbol {
        Symbol::new(self.charges.clone(), dp.clone()).expect("same d")
    }

    pub fn scale(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero(self.charges.clone());
        for (dp, p) in &self.terms {
            out.add_term(dp.clone(), p * c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> FockVector {
        let mut out = FockVector::zero(self.charges.clone());
        for (dp, p) in &self.terms {
            out.add_term(dp.clone(), f(p));
        }
        out
    }

    /// Coefficientwise `q ↦ q^-1`. This is not the bar involution of the
    /// module, which does not preserve the standard basis.
    pub fn bar_coeffs(&self) -> FockVector {
        self.map_coeffs(LaurentPoly::bar)
    }

    pub fn eval_at_one(&self) -> BTreeMap<DPartition, BigInt> {
        self.terms
            .iter()
            .map(|(dp, p)| (dp.clone(), p.eval_at_one()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// Whether all symbols share one weight.
    pub fn is_weight_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(|dp| weight(&self.symbol(dp)));
        match weights.next() {
            None => true,
            Some(w) => weights.all(|x| x == w),
        }
    }
}

impl Add for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        assert_eq!(self.charges, rhs.charges, "vectors of different Fock spaces");
        let mut out = self.clone();
        for (dp, p) in &rhs.terms {
            out.add_term(dp.clone(), p.clone());
        }
        out
    }
}

impl Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        assert_eq!(self.charges, rhs.charges, "vectors of different Fock spaces");
        let mut out = self.clone();
        for (dp, p) in &rhs.terms {
            out.add_term(dp.clone(), -p);
        }
        out
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (dp, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p}) * {dp}")?;
        }
        Ok(())
    }
}

/// The weight of `v_S` relative to the highest weight, encoded as the
/// sorted multiset of charged contents `r_i + b - a` of the boxes.
pub fn weight(s: &Symbol) -> Vec<i64> {
    let mut w: Vec<i64> = s
        .dpartition()
        .boxes()
        .iter()
        .map(|b| s.charges().charge(b.comp) + b.content())
        .collect();
    w.sort_unstable();
    w
}

fn epsilon(s: &Symbol, i: usize, m: i64) -> i64 {
    match (s.contains(i, m), s.contains(i, m + 1)) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

pub fn f_action(m: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.charges.clone());
    let d = v.charges.d();
    for (dp, c) in &v.terms {
        let s = v.symbol(dp);
        let eps: Vec<i64> = (1..=d).map(|i| epsilon(&s, i, m)).collect();
        for j in 1..=d {
            if eps[j - 1] != 1 {
                continue;
            }
            let n: i64 = eps[j..].iter().sum();
            let moved = s.move_bead(j, m, m + 1).expect("m in row, m+1 free");
            out.add_term(moved.into_dpartition(), c.shift(n));
        }
    }
    out
}

pub fn e_action(m: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero(v.charges.clone());
    let d = v.charges.d();
    for (dp, c) in &v.terms {
        let s = v.symbol(dp);
        let eps: Vec<i64> = (1..=d).map(|i| epsilon(&s, i, m)).collect();
        for j in 1..=d {
            if eps[j - 1] != -1 {
                continue;
            }
            let n: i64 = -eps[..j - 1].iter().sum::<i64>();
            let moved = s.move_bead(j, m + 1, m).expect("m+1 in row, m free");
            out.add_term(moved.into_dpartition(), c.shift(n));
        }
    }
    out
}

/// Exponent `h` with `K_m v_S = q^h v_S`.
pub fn k_exponent(m: i64, s: &Symbol) -> i64 {
    (1..=s.d()).map(|i| epsilon(s, i, m)).sum()
}

/// `F_m^(mult) v = F_m^mult v / [mult]!`.
pub fn divided_power_f(m: i64, mult: u32, v: &FockVector) -> Result<FockVector> {
    let mut w = v.clone();
    for _ in 0..mult {
        w = f_action(m, &w);
    }
    if mult <= 1 {
        return Ok(w);
    }
    let fact = q_factorial(mult);
    let mut out = FockVector::zero(w.charges.clone());
    for (dp, c) in w.terms {
        out.add_term(dp, c.exact_div(&fact)?);
    }
    Ok(out)
}

/// Signature of `s` for the pair `(m, m+1)` read over rows `1..=d`:
/// the rightmost uncancelled `-` (if any) and the number of uncancelled
/// `+`, after cancelling adjacent `+-` pairs.
fn signature(m: i64, s: &Symbol) -> (Option<usize>, usize) {
    let mut open_plus = 0usize;
    let mut last_minus = None;
    for i in 1..=s.d() {
        match epsilon(s, i, m) {
            -1 => open_plus += 1,
            1 if open_plus > 0 => open_plus -= 1,
            1 => last_minus = Some(i),
            _ => {}
        }
    }
    (last_minus, open_plus)
}

/// Kashiwara operator `f̃_m` by the signature rule.
pub fn crystal_f(m: i64, s: &Symbol) -> Option<Symbol> {
    let (row, _) = signature(m, s);
    row.map(|j| s.move_bead(j, m, m + 1).expect("signature row can move"))
}

/// `(f̃_m S, N)` where `q^N` is the coefficient of `f̃_m S` in `F_m v_S`.
/// `N` equals minus the number of uncancelled `+` signs.
pub fn crystal_f_with_exponent(m: i64, s: &Symbol) -> Option<(Symbol, i64)> {
    let (row, open_plus) = signature(m, s);
    row.map(|j| {
        (
            s.move_bead(j, m, m + 1).expect("signature row can move"),
            -(open_plus as i64),
        )
    })
}

/// Values `m` for which some row has `m ∈ β`, `m + 1 ∉ β`.
fn movable_values(s: &Symbol) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    for i in 1..=s.d() {
        let r = s.charges().charge(i);
        let len = s.dpartition().component(i).len() as i64;
        out.insert(r - len);
        for (_, v) in s.displaced_beads(i) {
            out.insert(v);
        }
    }
    out.retain(|&m| (1..=s.d()).any(|i| epsilon(s, i, m) == 1));
    out
}

/// Vertices of the crystal component of `S^0`, grouped by height.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalComponent {
    charges: ChargeVector,
    levels: Vec<BTreeSet<DPartition>>,
}

impl CrystalComponent {
    pub fn charges(&self) -> &ChargeVector {
        &self.charges
    }

    pub fn max_height(&self) -> u32 {
        self.levels.len() as u32 - 1
    }

    pub fn at_height(&self, h: u32) -> &BTreeSet<DPartition> {
        &self.levels[h as usize]
    }

    pub fn contains(&self, dp: &DPartition) -> bool {
        self.levels
            .get(dp.size() as usize)
            .is_some_and(|l| l.contains(dp))
    }

    pub fn symbols_at_height(&self, h: u32) -> impl Iterator<Item = Symbol> + '_ {
        self.at_height(h)
            .iter()
            .map(|dp| Symbol::new(self.charges.clone(), dp.clone()).expect("same d"))
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Breadth-first closure of `{S^0}` under the `f̃_m`, up to height `n`.
pub fn enumerate_standard_symbols(r: &ChargeVector, n: u32) -> CrystalComponent {
    let mut levels = vec![BTreeSet::new(); n as usize + 1];
    let start = Symbol::empty(r.clone());
    levels[0].insert(start.dpartition().clone());
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if s.height() == n {
            continue;
        }
        for m in movable_values(&s) {
            if let Some(t) = crystal_f(m, &s) {
                if levels[t.height() as usize].insert(t.dpartition().clone()) {
                    queue.push_back(t);
                }
            }
        }
    }
    CrystalComponent {
        charges: r.clone(),
        levels,
    }
}

/// Peeling word of `Σ`: repeatedly take the smallest `k` such that some
/// bead at a position `l ≤ k` has value `k + 1`, lower all such beads to
/// `k` and record `(k, count)`. Returned outermost operator first, so that
/// `A_Σ = F_{k_1}^{(a_1)} ... F_{k_s}^{(a_s)} v_{S^0}`.
pub fn lt_monomial(sigma: &Symbol) -> Result<Vec<(i64, u32)>> {
    let mut word = Vec::new();
    let mut cur = sigma.clone();
    let cap = sigma.height() as usize + 1;
    while cur.height() > 0 {
        if word.len() >= cap {
            return Err(Error::NonTerminating(format!("peeling {sigma}")));
        }
        let k = cur
            .displaced_values()
            .into_iter()
            .next()
            .expect("positive height has a displaced bead")
            - 1;
        let mut mult = 0;
        for i in 1..=cur.d() {
            if cur.displaced_beads(i).iter().any(|&(_, v)| v == k + 1) {
                cur = cur.move_bead(i, k + 1, k).ok_or_else(|| {
                    Error::NonTerminating(format!("cannot lower bead {} in {cur}", k + 1))
                })?;
                mult += 1;
            }
        }
        word.push((k, mult));
    }
    Ok(word)
}

/// The bar-invariant vector `A_Σ` obtained from the peeling word.
pub fn intermediate_a(sigma: &Symbol) -> Result<FockVector> {
    let word = lt_monomial(sigma)?;
    let mut v = FockVector::highest_weight(sigma.charges());
    for &(m, mult) in word.iter().rev() {
        v = divided_power_f(m, mult, &v)?;
    }
    let lead = v.coeff(sigma.dpartition());
    if !(&lead - &LaurentPoly::one()).in_qzq() {
        return Err(Error::LeadingTermMismatch {
            symbol: sigma.to_string(),
            coefficient: lead.to_string(),
        });
    }
    Ok(v)
}

/// Sort key used to pick among violators: rows compared from the last to
/// the first, by size and then by parts.
fn violator_key(dp: &DPartition) -> Vec<(u32, Vec<u32>)> {
    dp.components()
        .iter()
        .rev()
        .map(|p| (p.size(), p.parts().to_vec()))
        .collect()
}

/// Order in which symbols are handled. `Increasing` feeds the symbols of
/// each height in increasing order and removes the largest violator
/// first; `Decreasing` reverses both choices. The canonical basis is
/// unique, so both must give the same vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ProcessingOrder {
    #[default]
    Increasing,
    Decreasing,
}

/// Canonical basis vectors `b_Σ` for the standard symbols up to some height.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalBasis {
    pub charges: ChargeVector,
    pub heights: Vec<u32>,
    pub vectors: BTreeMap<DPartition, FockVector>,
    /// Positivity failures; expected to stay empty.
    pub warnings: Vec<String>,
}

impl CanonicalBasis {
    pub fn get(&self, dp: &DPartition) -> Option<&FockVector> {
        self.vectors.get(dp)
    }

    pub fn at_height(&self, h: u32) -> impl Iterator<Item = (&DPartition, &FockVector)> {
        self.vectors.iter().filter(move |(dp, _)| dp.size() == h)
    }
}

struct Solver<'a> {
    component: &'a CrystalComponent,
    done: BTreeMap<DPartition, FockVector>,
    in_progress: HashSet<DPartition>,
    warnings: Vec<String>,
    order: ProcessingOrder,
}

impl Solver<'_> {
    fn solve(&mut self, dp: &DPartition) -> Result<FockVector> {
        if let Some(b) = self.done.get(dp) {
            return Ok(b.clone());
        }
        if !self.in_progress.insert(dp.clone()) {
            return Err(Error::NonTerminating(format!(
                "cyclic dependency between canonical basis vectors at {dp}"
            )));
        }
        let charges = self.component.charges();
        let sigma = Symbol::new(charges.clone(), dp.clone())?;
        let mut w = intermediate_a(&sigma)?;
        let h = dp.size();
        let cap = enumerate_dpartitions(charges.d(), h).len().pow(2).max(4);
        let mut iterations = 0;
        loop {
            let violators = w
                .terms()
                .filter(|(s, c)| *s != dp && self.component.contains(s) && !c.in_qzq());
            let violator = match self.order {
                ProcessingOrder::Increasing => violators.max_by_key(|(s, _)| violator_key(s)),
                ProcessingOrder::Decreasing => violators.min_by_key(|(s, _)| violator_key(s)),
            }
            .map(|(s, c)| (s.clone(), c.clone()));
            let Some((s, c)) = violator else { break };
            iterations += 1;
            if iterations > cap {
                return Err(Error::NonTerminating(format!(
                    "more than {cap} corrections for {sigma}"
                )));
            }
            let gamma = c.bar_symmetrized_head();
            let b = self.solve(&s)?;
            w = &w - &b.scale(&gamma);
        }
        for (s, c) in w.terms() {
            let ok = if s == dp {
                (c - &LaurentPoly::one()).in_qzq()
            } else {
                c.in_qzq()
            };
            if !ok {
                return Err(Error::LatticeViolation {
                    symbol: sigma.to_string(),
                    at: s.to_string(),
                    coefficient: c.to_string(),
                });
            }
        }
        if !w.terms().all(|(_, c)| c.has_nonnegative_coeffs()) {
            let msg = format!("b[{sigma}] has a negative coefficient: {w}");
            log::warn!("{msg}");
            self.warnings.push(msg);
        }
        self.in_progress.remove(dp);
        self.done.insert(dp.clone(), w.clone());
        Ok(w)
    }
}

fn solve_heights(
    component: &CrystalComponent,
    heights: &[u32],
    order: ProcessingOrder,
) -> Result<CanonicalBasis> {
    let mut solver = Solver {
        component,
        done: BTreeMap::new(),
        in_progress: HashSet::new(),
        warnings: Vec::new(),
        order,
    };
    for &h in heights {
        let mut symbols: Vec<&DPartition> = component.at_height(h).iter().collect();
        symbols.sort_by_key(|dp| violator_key(dp));
        if order == ProcessingOrder::Decreasing {
            symbols.reverse();
        }
        for dp in symbols {
            solver.solve(dp)?;
        }
    }
    Ok(CanonicalBasis {
        charges: component.charges().clone(),
        heights: heights.to_vec(),
        vectors: solver.done,
        warnings: solver.warnings,
    })
}

/// `b_Σ` for every standard `Σ` of height at most `n`.
pub fn canonical_basis(r: &ChargeVector, n: u32) -> Result<CanonicalBasis> {
    canonical_basis_with_order(r, n, ProcessingOrder::Increasing)
}

pub fn canonical_basis_with_order(
    r: &ChargeVector,
    n: u32,
    order: ProcessingOrder,
) -> Result<CanonicalBasis> {
    let component = enumerate_standard_symbols(r, n);
    let heights: Vec<u32> = (0..=n).collect();
    solve_heights(&component, &heights, order)
}

/// `b_Σ` for the standard `Σ` of height exactly `n`.
pub fn canonical_basis_at_height(r: &ChargeVector, n: u32) -> Result<CanonicalBasis> {
    let component = enumerate_standard_symbols(r, n);
    solve_heights(&component, &[n], ProcessingOrder::Increasing)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmCell {
    pub symbol: DPartition,
    pub character: CharacterSum,
}

/// Constructible characters `γ_Σ = Σ_S a_Σ^S(1) χ_S` of `G(d,1,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LmCells {
    pub charges: ChargeVector,
    pub n: u32,
    /// One entry per standard symbol of height `n`.
    pub cells: Vec<LmCell>,
    pub warnings: Vec<String>,
}

impl LmCells {
    pub fn set(&self) -> BTreeSet<CharacterSum> {
        self.cells.iter().map(|c| c.character.clone()).collect()
    }
}

pub fn character_at_one(b: &FockVector, d: usize, n: u32) -> Result<CharacterSum> {
    let mut ch = CharacterSum::zero(d, n);
    for (dp, c) in b.eval_at_one() {
        if c.is_negative() {
            return Err(Error::NegativeMultiplicity {
                dpartition: dp.to_string(),
                mult: c.to_string(),
            });
        }
        let m = c.to_u64().expect("multiplicity fits in u64");
        ch.add(dp, m)?;
    }
    Ok(ch)
}

pub fn lm_constructible(r: &ChargeVector, n: u32) -> Result<LmCells> {
    let basis = canonical_basis_at_height(r, n)?;
    let d = r.d();
    let cells = basis
        .at_height(n)
        .map(|(dp, b)| {
            Ok(LmCell {
                symbol: dp.clone(),
                character: character_at_one(b, d, n)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LmCells {
        charges: r.clone(),
        n,
        cells,
        warnings: basis.warnings,
    })
}
