//! The dictionary `k#_i = -c0·r_i` between reflection parameters and
//! charges, and the comparison of Calogero-Moser cellular characters with
//! Leclerc-Miyachi constructible characters.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::CharacterSum;
use crate::error::{Error, Result};
use crate::fock::lm_constructible;
use crate::gd12::cm_cells_n2;
use crate::jm::{is_generic, jm_cellular_characters, CMParams};
use crate::qlaurent::{rational, rational_str, Rational};
use crate::symbol::ChargeVector;

/// `k#_i = -c0·r_i`.
pub fn params_from_r(r: &ChargeVector, c0: &Rational) -> Result<CMParams> {
    if c0.is_zero() {
        return Err(Error::InvalidParam("c0 must be nonzero".into()));
    }
    let ksharp = r.as_slice().iter().map(|&x| -(c0 * rational(x))).collect();
    CMParams::from_ksharp(c0.clone(), ksharp)
}

/// `r_i = -k#_i / c0 + shift`.
pub fn r_from_params(p: &CMParams, shift: i64) -> Result<ChargeVector> {
    if p.c0().is_zero() {
        return Err(Error::InvalidParam("c0 must be nonzero".into()));
    }
    let mut r = Vec::with_capacity(p.d());
    for (i, k) in p.ksharp_vec().iter().enumerate() {
        let ratio = -(k / p.c0());
        if !ratio.is_integer() {
            return Err(Error::NonIntegralRatio(format!(
                "-k#_{}/c0 = {ratio} is not an integer",
                i + 1
            )));
        }
        let v: i64 = ratio.to_integer().try_into().map_err(|_| {
            Error::NonIntegralRatio(format!("-k#_{}/c0 = {ratio} does not fit in i64", i + 1))
        })?;
        r.push(v + shift);
    }
    ChargeVector::new(r)
}

/// Charges for `p` normalized by `r_d = shift`; only the differences
/// `(k#_i - k#_d)/c0` need to be integers.
pub fn r_from_params_anchored(p: &CMParams, shift: i64) -> Result<ChargeVector> {
    let last = p.ksharp(p.d()).clone();
    r_from_params(&p.k_shifted(&-last), shift)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureInput {
    Charges {
        r: ChargeVector,
        #[serde(with = "rational_str")]
        c0: Rational,
    },
    Params(CMParams),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictMode {
    /// `n = 2`: closed forms for the Calogero-Moser side.
    ExactN2,
    /// Generic parameters: JM cells are the Calogero-Moser cells.
    Generic,
    /// Non-generic, `n ≠ 2`: JM cells are unions of Calogero-Moser cells.
    JmUpperBound,
}

pub const INCONCLUSIVE: &str = "inconclusive (JM cells may merge CM cells)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureVerdict {
    pub r: ChargeVector,
    pub params: CMParams,
    pub n: u32,
    pub mode: VerdictMode,
    pub equal: bool,
    pub cm_set: BTreeSet<CharacterSum>,
    pub lm_set: BTreeSet<CharacterSum>,
    /// Elements of `cm_set` missing from `lm_set`.
    pub only_cm: Vec<CharacterSum>,
    /// Elements of `lm_set` missing from `cm_set`.
    pub only_lm: Vec<CharacterSum>,
    pub cm_multiset: Vec<CharacterSum>,
    pub lm_multiset: Vec<CharacterSum>,
    pub multiset_equal: bool,
    pub caveat: Option<String>,
    pub warnings: Vec<String>,
}

fn sorted(mut v: Vec<CharacterSum>) -> Vec<CharacterSum> {
    v.sort();
    v
}

pub fn check_conjecture(input: &ConjectureInput, n: u32) -> Result<ConjectureVerdict> {
    let (r, params) = match input {
        ConjectureInput::Charges { r, c0 } => (r.clone(), params_from_r(r, c0)?),
        ConjectureInput::Params(p) => (r_from_params_anchored(p, 0)?, p.clone()),
    };
    let lm = lm_constructible(&r, n)?;
    let lm_multiset = sorted(lm.cells.iter().map(|c| c.character.clone()).collect());

    let (mode, cm_multiset) = if n == 2 {
        let cells = cm_cells_n2(&params);
        (
            VerdictMode::ExactN2,
            cells.family.into_iter().map(|c| c.character).collect(),
        )
    } else {
        let mode = if is_generic(&params, n).generic {
            VerdictMode::Generic
        } else {
            VerdictMode::JmUpperBound
        };
        let cells = jm_cellular_characters(&params, n);
        (mode, cells.cells.into_iter().map(|c| c.character).collect())
    };
    let cm_multiset = sorted(cm_multiset);
    let cm_set: BTreeSet<_> = cm_multiset.iter().cloned().collect();
    let lm_set: BTreeSet<_> = lm_multiset.iter().cloned().collect();
    let only_cm: Vec<_> = cm_set.difference(&lm_set).cloned().collect();
    let only_lm: Vec<_> = lm_set.difference(&cm_set).cloned().collect();
    let equal = only_cm.is_empty() && only_lm.is_empty();
    let caveat = match (mode, equal) {
        (VerdictMode::JmUpperBound, false) => Some(INCONCLUSIVE.to_string()),
        (VerdictMode::JmUpperBound, true) => Some(
            "JM cells are sums of CM cells; equality does not pin down the CM cells".to_string(),
        ),
        _ => None,
    };
    Ok(ConjectureVerdict {
        r,
        params,
        n,
        mode,
        equal,
        multiset_equal: cm_multiset == lm_multiset,
        cm_set,
        lm_set,
        only_cm,
        only_lm,
        cm_multiset,
        lm_multiset,
        caveat,
        warnings: lm.warnings,
    })
}
