//! Shared fixtures: the parameter battery and an independent oracle for the
//! height-two canonical basis written straight from the closed forms.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;

use cellchar::{CharacterSum, ChargeVector, DPartition, Partition};

pub fn cv(s: &str) -> ChargeVector {
    s.parse().unwrap()
}

/// Named charge vectors plus every weakly decreasing `r` with `r_d = 0`
/// and `r_1 <= 3` for `d = 2, 3, 4`.
pub fn n2_battery() -> Vec<ChargeVector> {
    let mut out: Vec<ChargeVector> = ["1,0", "3,0", "1,1,0", "0,0", "2,2,1,0", "0,0,0", "0,0,0,0"]
        .iter()
        .map(|s| cv(s))
        .collect();
    for d in 2..=4usize {
        let mut stack = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == d - 1 {
                let mut r: Vec<i64> = prefix.clone();
                r.push(0);
                let r = ChargeVector::new(r).unwrap();
                if !out.contains(&r) {
                    out.push(r);
                }
                continue;
            }
            let hi = prefix.last().copied().unwrap_or(3);
            for v in 0..=hi {
                let mut p = prefix.clone();
                p.push(v);
                stack.push(p);
            }
        }
    }
    out
}

fn dp_with(d: usize, comps: &[(usize, Vec<u32>)]) -> DPartition {
    let mut v = vec![Partition::new(vec![]).unwrap(); d];
    for (i, parts) in comps {
        v[i - 1] = Partition::new(parts.clone()).unwrap();
    }
    DPartition::new(v).unwrap()
}

/// `S_i`: the bead of row `i` at position `r_i` raised by two.
pub fn s_single(d: usize, i: usize) -> DPartition {
    dp_with(d, &[(i, vec![2])])
}

/// `S'_i`: the two top beads of row `i` raised by one.
pub fn s_prime(d: usize, i: usize) -> DPartition {
    dp_with(d, &[(i, vec![1, 1])])
}

/// `S_{i,j}`: the top beads of rows `i` and `j` raised by one.
pub fn s_pair(d: usize, i: usize, j: usize) -> DPartition {
    let (a, b) = (i.min(j), i.max(j));
    dp_with(d, &[(a, vec![1]), (b, vec![1])])
}

/// Blocks `(i_{k-1}, i_k]` of equal charges, as 1-based index lists.
pub fn blocks(r: &ChargeVector) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 1..=r.d() {
        match out.last_mut() {
            Some(b) if r.charge(b[0]) == r.charge(i) => b.push(i),
            _ => out.push(vec![i]),
        }
    }
    out
}

/// For each standard symbol `Σ` of height two, the expansion of `A_Σ`
/// (equal to `b_Σ`) with every power of `q` replaced by one.
///
/// The gap below the last block is taken to be infinite, so `S'_{i_p}` is
/// standard.
pub fn height_two_at_one(r: &ChargeVector) -> BTreeMap<DPartition, BTreeMap<DPartition, u64>> {
    let d = r.d();
    let bl = blocks(r);
    let p = bl.len();
    let last = |k: usize| *bl[k].last().unwrap();
    let charge = |k: usize| r.charge(last(k));
    let mut out = BTreeMap::new();
    let mut put = |sigma: DPartition, terms: Vec<DPartition>| {
        let mut m = BTreeMap::new();
        for t in terms {
            *m.entry(t).or_insert(0) += 1;
        }
        assert!(out.insert(sigma, m).is_none());
    };
    for k in 0..p {
        for l in k + 1..p {
            let mut t = Vec::new();
            for &i in &bl[k] {
                if charge(k) == charge(l) + 1 {
                    t.push(s_prime(d, i));
                }
                for &j in &bl[l] {
                    t.push(s_pair(d, i, j));
                }
            }
            put(s_pair(d, last(k), last(l)), t);
        }
    }
    for k in 0..p {
        if bl[k].len() >= 2 {
            let mut t = Vec::new();
            for (x, &i) in bl[k].iter().enumerate() {
                for &j in &bl[k][x + 1..] {
                    t.push(s_pair(d, i, j));
                }
            }
            put(s_pair(d, last(k) - 1, last(k)), t);
        }
    }
    for k in 0..p {
        let mut t = Vec::new();
        for &i in &bl[k] {
            t.push(s_single(d, i));
            if k > 0 && charge(k - 1) == charge(k) + 1 {
                for &j in &bl[k - 1] {
                    t.push(s_pair(d, j, i));
                }
            }
        }
        put(s_single(d, last(k)), t);
    }
    for k in 0..p {
        if k + 1 == p || charge(k) - charge(k + 1) >= 2 {
            put(s_prime(d, last(k)), bl[k].iter().map(|&i| s_prime(d, i)).collect());
        }
    }
    out
}

pub fn as_character(d: usize, n: u32, m: &BTreeMap<DPartition, u64>) -> CharacterSum {
    CharacterSum::from_terms(d, n, m.iter().map(|(k, &v)| (k.clone(), v))).unwrap()
}

/// Nonnegative integer coefficients `c` with `Σ c_i parts_i = target`, by
/// exhaustive search.
pub fn decompose(target: &CharacterSum, parts: &[CharacterSum]) -> Option<Vec<u64>> {
    fn go(rest: &CharacterSum, parts: &[CharacterSum], coeffs: &mut Vec<u64>) -> bool {
        let Some((first, _)) = rest.terms().next() else {
            return true;
        };
        for (idx, part) in parts.iter().enumerate() {
            if part.multiplicity(first) == 0 {
                continue;
            }
            if !part.terms().all(|(l, m)| rest.multiplicity(l) >= m) {
                continue;
            }
            let mut next = CharacterSum::zero(rest.d(), rest.n());
            for (l, m) in rest.terms() {
                next.add(l.clone(), m - part.multiplicity(l)).unwrap();
            }
            coeffs[idx] += 1;
            if go(&next, parts, coeffs) {
                return true;
            }
            coeffs[idx] -= 1;
        }
        false
    }
    let mut coeffs = vec![0; parts.len()];
    go(target, parts, &mut coeffs).then_some(coeffs)
}
