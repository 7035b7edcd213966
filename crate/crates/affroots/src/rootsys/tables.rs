//! Row data for the four families, plus a second, deliberately naive
//! transcription of the tables used as an oracle.

use super::{Family, Progression, Shape};
use crate::lattice::RootVec;
use std::collections::BTreeSet;

const Z: Progression = Progression::arith(1, 0);
const EVEN: Progression = Progression::arith(2, 0);
const ODD: Progression = Progression::arith(2, 1);
const FOUR: Progression = Progression::arith(4, 0);
const FOUR_2: Progression = Progression::arith(4, 2);

/// Rows of `R`: a shape together with the δ-levels it occurs at.
pub(crate) fn root_rows(family: Family) -> &'static [(Shape, Progression)] {
    use Shape::*;
    match family {
        Family::AEvenOdd => &[
            (Zero, Z),
            (E, Z),
            (D, Z),
            (EE, Z),
            (DD, Z),
            (ED, Z),
            (TwoE, ODD),
            (TwoD, EVEN),
        ],
        Family::AOddOdd => &[
            (Zero, Z),
            (EE, Z),
            (DD, Z),
            (ED, Z),
            (TwoE, ODD),
            (TwoD, EVEN),
        ],
        Family::AEvenEven => &[
            (Zero, Z),
            (E, Z),
            (D, Z),
            (EE, EVEN),
            (DD, EVEN),
            (ED, EVEN),
            (TwoE, FOUR_2),
            (TwoD, FOUR),
        ],
        Family::D => &[
            (Zero, Z),
            (E, Z),
            (D, Z),
            (TwoD, EVEN),
            (EE, EVEN),
            (DD, EVEN),
            (ED, EVEN),
        ],
    }
}

/// Rows of `R_0`. The `Zero` row records the imaginary part of `R_0`.
pub(crate) fn even_rows(family: Family) -> &'static [(Shape, Progression)] {
    use Shape::*;
    match family {
        Family::AEvenOdd => &[
            (Zero, Z),
            (E, Z),
            (EE, Z),
            (DD, Z),
            (TwoE, ODD),
            (TwoD, EVEN),
        ],
        Family::AOddOdd => &[(Zero, Z), (EE, Z), (DD, Z), (TwoE, ODD), (TwoD, EVEN)],
        Family::AEvenEven => &[
            (Zero, EVEN),
            (E, EVEN),
            (D, ODD),
            (EE, EVEN),
            (DD, EVEN),
            (TwoE, FOUR_2),
            (TwoD, FOUR),
        ],
        Family::D => &[(Zero, Z), (E, Z), (TwoD, EVEN), (EE, EVEN), (DD, EVEN)],
    }
}

pub(crate) fn lookup(rows: &[(Shape, Progression)], shape: Shape) -> Progression {
    rows.iter()
        .find(|(s, _)| *s == shape)
        .map(|(_, p)| *p)
        .unwrap_or(Progression::Empty)
}

// ---------------------------------------------------------------------------
// Literal transcription. Each table row is spelled out as "levels ± set",
// with the finite sets built by explicit loops over indices. Nothing here
// goes through `Shape`.

fn unit(k: usize, l: usize, eps: &[(usize, i64)], del: &[(usize, i64)]) -> RootVec {
    let mut v = RootVec::zero(k, l);
    for &(i, c) in eps {
        v.e[i] += c;
    }
    for &(j, c) in del {
        v.f[j] += c;
    }
    v
}

fn pm(set: Vec<RootVec>) -> Vec<RootVec> {
    let mut out = set.clone();
    out.extend(set.iter().map(|v| -v));
    out
}

/// `{ε_i}`
fn eps_i(k: usize, l: usize) -> Vec<RootVec> {
    (0..k).map(|i| unit(k, l, &[(i, 1)], &[])).collect()
}

/// `{δ_j}`
fn del_j(k: usize, l: usize) -> Vec<RootVec> {
    (0..l).map(|j| unit(k, l, &[], &[(j, 1)])).collect()
}

/// `{ε_i ± ε_r | i ≠ r}`
fn eps_pm_eps(k: usize, l: usize) -> Vec<RootVec> {
    let mut out = vec![];
    for i in 0..k {
        for r in 0..k {
            if i != r {
                out.push(unit(k, l, &[(i, 1), (r, 1)], &[]));
                out.push(unit(k, l, &[(i, 1), (r, -1)], &[]));
            }
        }
    }
    out
}

/// `{δ_j ± δ_s | j ≠ s}`
fn del_pm_del(k: usize, l: usize) -> Vec<RootVec> {
    let mut out = vec![];
    for j in 0..l {
        for s in 0..l {
            if j != s {
                out.push(unit(k, l, &[], &[(j, 1), (s, 1)]));
                out.push(unit(k, l, &[], &[(j, 1), (s, -1)]));
            }
        }
    }
    out
}

/// `{ε_i ± δ_j}`
fn eps_pm_del(k: usize, l: usize) -> Vec<RootVec> {
    let mut out = vec![];
    for i in 0..k {
        for j in 0..l {
            out.push(unit(k, l, &[(i, 1)], &[(j, 1)]));
            out.push(unit(k, l, &[(i, 1)], &[(j, -1)]));
        }
    }
    out
}

/// `{2ε_i}`
fn two_eps(k: usize, l: usize) -> Vec<RootVec> {
    (0..k).map(|i| unit(k, l, &[(i, 2)], &[])).collect()
}

/// `{2δ_j}`
fn two_del(k: usize, l: usize) -> Vec<RootVec> {
    (0..l).map(|j| unit(k, l, &[], &[(j, 2)])).collect()
}

type LevelSet = fn(i64) -> bool;

fn all(_: i64) -> bool {
    true
}
fn even(d: i64) -> bool {
    d.rem_euclid(2) == 0
}
fn odd(d: i64) -> bool {
    d.rem_euclid(2) == 1
}
fn four(d: i64) -> bool {
    d.rem_euclid(4) == 0
}
fn four_plus_two(d: i64) -> bool {
    d.rem_euclid(4) == 2
}

fn emit(out: &mut BTreeSet<RootVec>, n: i64, levels: LevelSet, set: &[RootVec]) {
    for d in -n..=n {
        if levels(d) {
            for v in set {
                out.insert(v.at_level(d));
            }
        }
    }
}

fn imaginary(k: usize, l: usize) -> Vec<RootVec> {
    vec![RootVec::zero(k, l)]
}

/// `R ∩ {|d| ≤ n}` read straight off the root-system table.
pub fn literal_roots(family: Family, k: usize, l: usize, n: i64) -> BTreeSet<RootVec> {
    let mut out = BTreeSet::new();
    let cat = |parts: Vec<Vec<RootVec>>| pm(parts.concat());
    match family {
        Family::AEvenOdd => {
            // ℤδ ∪ ℤδ±{ε_i, δ_j, ε_i±ε_r, δ_j±δ_s, ε_i±δ_j} ∪ (2ℤ+1)δ±{2ε_i} ∪ 2ℤδ±{2δ_j}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(
                &mut out,
                n,
                all,
                &cat(vec![
                    eps_i(k, l),
                    del_j(k, l),
                    eps_pm_eps(k, l),
                    del_pm_del(k, l),
                    eps_pm_del(k, l),
                ]),
            );
            emit(&mut out, n, odd, &pm(two_eps(k, l)));
            emit(&mut out, n, even, &pm(two_del(k, l)));
        }
        Family::AOddOdd => {
            // ℤδ ∪ ℤδ±{ε_i±ε_r, δ_j±δ_s, ε_i±δ_j} ∪ (2ℤ+1)δ±{2ε_i} ∪ 2ℤδ±{2δ_j}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(
                &mut out,
                n,
                all,
                &cat(vec![eps_pm_eps(k, l), del_pm_del(k, l), eps_pm_del(k, l)]),
            );
            emit(&mut out, n, odd, &pm(two_eps(k, l)));
            emit(&mut out, n, even, &pm(two_del(k, l)));
        }
        Family::AEvenEven => {
            // ℤδ ∪ ℤδ±{ε_i, δ_j} ∪ 2ℤδ±{ε_i±ε_r, δ_j±δ_s, δ_j±ε_i} ∪ (4ℤ+2)δ±{2ε_i} ∪ 4ℤδ±{2δ_j}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(&mut out, n, all, &cat(vec![eps_i(k, l), del_j(k, l)]));
            emit(
                &mut out,
                n,
                even,
                &cat(vec![eps_pm_eps(k, l), del_pm_del(k, l), eps_pm_del(k, l)]),
            );
            emit(&mut out, n, four_plus_two, &pm(two_eps(k, l)));
            emit(&mut out, n, four, &pm(two_del(k, l)));
        }
        Family::D => {
            // ℤδ ∪ ℤδ±{ε_i, δ_j} ∪ 2ℤδ±{2δ_j, ε_i±ε_r, δ_j±δ_s, δ_j±ε_i}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(&mut out, n, all, &cat(vec![eps_i(k, l), del_j(k, l)]));
            emit(
                &mut out,
                n,
                even,
                &cat(vec![
                    two_del(k, l),
                    eps_pm_eps(k, l),
                    del_pm_del(k, l),
                    eps_pm_del(k, l),
                ]),
            );
        }
    }
    out
}

/// `R_0 ∩ {|d| ≤ n}` read straight off the even-part table.
pub fn literal_even(family: Family, k: usize, l: usize, n: i64) -> BTreeSet<RootVec> {
    let mut out = BTreeSet::new();
    let cat = |parts: Vec<Vec<RootVec>>| pm(parts.concat());
    match family {
        Family::AEvenOdd => {
            // ℤδ ∪ ℤδ±{ε_i, ε_i±ε_r, δ_j±δ_s} ∪ (2ℤ+1)δ±{2ε_i} ∪ 2ℤδ±{2δ_j}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(
                &mut out,
                n,
                all,
                &cat(vec![eps_i(k, l), eps_pm_eps(k, l), del_pm_del(k, l)]),
            );
            emit(&mut out, n, odd, &pm(two_eps(k, l)));
            emit(&mut out, n, even, &pm(two_del(k, l)));
        }
        Family::AOddOdd => {
            // ℤδ ∪ ℤδ±{ε_i±ε_r, δ_j±δ_s} ∪ (2ℤ+1)δ±{2ε_i} ∪ 2ℤδ±{2δ_j}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(
                &mut out,
                n,
                all,
                &cat(vec![eps_pm_eps(k, l), del_pm_del(k, l)]),
            );
            emit(&mut out, n, odd, &pm(two_eps(k, l)));
            emit(&mut out, n, even, &pm(two_del(k, l)));
        }
        Family::AEvenEven => {
            // 2ℤδ ∪ 2ℤδ±{ε_i} ∪ (2ℤ+1)δ±{δ_j} ∪ 2ℤδ±{ε_i±ε_r, δ_j±δ_s}
            //     ∪ (4ℤ+2)δ±{2ε_i} ∪ 4ℤδ±{2δ_j}
            emit(&mut out, n, even, &imaginary(k, l));
            emit(&mut out, n, even, &pm(eps_i(k, l)));
            emit(&mut out, n, odd, &pm(del_j(k, l)));
            emit(
                &mut out,
                n,
                even,
                &cat(vec![eps_pm_eps(k, l), del_pm_del(k, l)]),
            );
            emit(&mut out, n, four_plus_two, &pm(two_eps(k, l)));
            emit(&mut out, n, four, &pm(two_del(k, l)));
        }
        Family::D => {
            // ℤδ ∪ ℤδ±{ε_i} ∪ 2ℤδ±{2δ_j, ε_i±ε_r, δ_j±δ_s}
            emit(&mut out, n, all, &imaginary(k, l));
            emit(&mut out, n, all, &pm(eps_i(k, l)));
            emit(
                &mut out,
                n,
                even,
                &cat(vec![two_del(k, l), eps_pm_eps(k, l), del_pm_del(k, l)]),
            );
        }
    }
    out
}

/// One row of the extension-set table: a direction class, a representative
/// builder, and the S then T cells per family in the column order
/// `AEvenOdd, AOddOdd, AEvenEven, D`. `None` in `t` marks a missing row.
pub struct ExtensionRow {
    pub name: &'static str,
    pub s: [Progression; 4],
    pub t: Option<[Progression; 4]>,
    pub members: fn(usize, usize) -> Vec<RootVec>,
}

const E: Progression = Progression::Empty;

pub fn column(family: Family) -> usize {
    match family {
        Family::AEvenOdd => 0,
        Family::AOddOdd => 1,
        Family::AEvenEven => 2,
        Family::D => 3,
    }
}

pub fn extension_table() -> Vec<ExtensionRow> {
    vec![
        ExtensionRow {
            name: "±ε_i",
            s: [Z, E, Z, Z],
            t: Some([Z, E, EVEN, Z]),
            members: |k, l| pm(eps_i(k, l)),
        },
        ExtensionRow {
            name: "±ε_i±ε_j",
            s: [Z, Z, EVEN, EVEN],
            t: Some([Z, Z, EVEN, EVEN]),
            members: |k, l| pm(eps_pm_eps(k, l)),
        },
        ExtensionRow {
            name: "±2ε_i",
            s: [ODD, ODD, FOUR_2, E],
            t: Some([ODD, ODD, FOUR_2, E]),
            members: |k, l| pm(two_eps(k, l)),
        },
        ExtensionRow {
            name: "±δ_j",
            s: [Z, E, Z, Z],
            t: Some([E, E, ODD, E]),
            members: |k, l| pm(del_j(k, l)),
        },
        ExtensionRow {
            name: "±δ_j±δ_s",
            s: [Z, Z, EVEN, EVEN],
            t: Some([Z, Z, EVEN, EVEN]),
            members: |k, l| pm(del_pm_del(k, l)),
        },
        ExtensionRow {
            name: "±2δ_j",
            s: [EVEN, EVEN, FOUR, EVEN],
            t: Some([EVEN, EVEN, FOUR, EVEN]),
            members: |k, l| pm(two_del(k, l)),
        },
        ExtensionRow {
            name: "±ε_i±δ_j",
            s: [Z, Z, EVEN, EVEN],
            t: None,
            members: |k, l| pm(eps_pm_del(k, l)),
        },
    ]
}
