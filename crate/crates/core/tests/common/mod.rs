//! Test-only reference implementations, independent of the library's
//! alternant-based characters: tableau generating functions for U, SU and Sp,
//! the SU(2) × SU(2) model of SO(4), and a greedy decomposer built on them.

#![allow(dead_code)]

use std::collections::BTreeMap;

use multfree_core::partition::partitions_up_to;
use multfree_core::{Family, FormalSum, IrrepLabel, Partition};

/// Exponent vector → coefficient.
pub type Char = BTreeMap<Vec<i32>, i64>;

pub fn add_into(acc: &mut Char, other: &Char, factor: i64) {
    for (e, c) in other {
        let v = acc.entry(e.clone()).or_insert(0);
        *v += c * factor;
        if *v == 0 {
            acc.remove(e);
        }
    }
}

pub fn mul(a: &Char, b: &Char) -> Char {
    let mut out = Char::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Fills a Young diagram row by row with letters `0..letters`, rows weakly
/// increasing, columns strictly increasing, and `allowed(row, letter)`.
fn fillings(shape: &[u32], letters: u32, allowed: &dyn Fn(usize, u32) -> bool, visit: &mut dyn FnMut(&[Vec<u32>])) {
    fn go(
        shape: &[u32],
        letters: u32,
        allowed: &dyn Fn(usize, u32) -> bool,
        row: usize,
        col: usize,
        t: &mut Vec<Vec<u32>>,
        visit: &mut dyn FnMut(&[Vec<u32>]),
    ) {
        if row == shape.len() {
            visit(t);
            return;
        }
        if col == shape[row] as usize {
            t.push(Vec::new());
            go(shape, letters, allowed, row + 1, 0, t, visit);
            t.pop();
            return;
        }
        let mut lo = if col > 0 { t[row][col - 1] } else { 0 };
        if row > 0 {
            lo = lo.max(t[row - 1][col] + 1);
        }
        for v in lo..letters {
            if !allowed(row, v) {
                continue;
            }
            t[row].push(v);
            go(shape, letters, allowed, row, col + 1, t, visit);
            t[row].pop();
        }
    }
    let mut t = vec![Vec::new()];
    go(shape, letters, allowed, 0, 0, &mut t, visit);
}

/// Schur polynomial `s_λ(x_1..x_k)` from semistandard tableaux.
pub fn schur(shape: &[u32], k: usize) -> Char {
    let mut out = Char::new();
    fillings(shape, k as u32, &|_, _| true, &mut |t| {
        let mut e = vec![0i32; k];
        for v in t.iter().flatten() {
            e[*v as usize] += 1;
        }
        *out.entry(e).or_insert(0) += 1;
    });
    out
}

/// Symplectic character from King tableaux on `1 < 1̄ < 2 < 2̄ < ...`:
/// entries of row `i` are at least `i`.
pub fn king(shape: &[u32], n: usize) -> Char {
    let mut out = Char::new();
    if shape.len() > n {
        return out;
    }
    // letter 2i is i+1, letter 2i+1 is its barred copy
    fillings(shape, 2 * n as u32, &|row, v| v >= 2 * row as u32, &mut |t| {
        let mut e = vec![0i32; n];
        for v in t.iter().flatten() {
            let i = (*v / 2) as usize;
            e[i] += if v % 2 == 0 { 1 } else { -1 };
        }
        *out.entry(e).or_insert(0) += 1;
    });
    out
}

/// Reference character of a label in the library's torus coordinates.
pub fn reference_character(label: &IrrepLabel) -> Char {
    let w = label.weight();
    match label.family() {
        Family::Circle => [(vec![w[0]], 1)].into_iter().collect(),
        Family::Sp => {
            let shape: Vec<u32> = w.iter().map(|&a| a as u32).collect();
            king(&shape, label.rank() as usize)
        }
        Family::U => {
            let k = label.rank() as usize;
            let last = w[k - 1];
            let shape: Vec<u32> = w.iter().map(|&a| (a - last) as u32).collect();
            schur(&shape, k)
                .into_iter()
                .map(|(e, c)| (e.into_iter().map(|x| x + last).collect(), c))
                .collect()
        }
        Family::SU => {
            let m = label.rank() as usize;
            let shape: Vec<u32> = w.iter().map(|&a| a as u32).collect();
            let mut out = Char::new();
            for (e, c) in schur(&shape, m) {
                let norm: Vec<i32> = e[..m - 1].iter().map(|x| x - e[m - 1]).collect();
                *out.entry(norm).or_insert(0) += c;
            }
            out
        }
        Family::SO => {
            assert_eq!(label.rank(), 4, "reference model only covers SO(4)");
            // SO(4) = SU(2) × SU(2) / ±1 with x1 = yz, x2 = y/z.
            let (a, b) = (w[0], w[1]);
            let (p, q) = (a + b, a - b);
            let mut out = Char::new();
            for i in 0..=p {
                for j in 0..=q {
                    let (ey, ez) = (p - 2 * i, q - 2 * j);
                    *out.entry(vec![(ey + ez) / 2, (ey - ez) / 2]).or_insert(0) += 1;
                }
            }
            out
        }
    }
}

fn dominant(family: Family, e: &[i32]) -> bool {
    let decreasing = e.windows(2).all(|w| w[0] >= w[1]);
    match family {
        Family::Circle => true,
        Family::U => decreasing,
        Family::SU | Family::Sp => decreasing && e.last().is_none_or(|&x| x >= 0),
        Family::SO => decreasing && (e.len() < 2 || e[e.len() - 2] >= e[e.len() - 1].abs()),
    }
}

/// Greedy decomposition with reference characters.
pub fn reference_decompose(a: &IrrepLabel, b: &IrrepLabel) -> FormalSum<IrrepLabel> {
    let family = a.family();
    let mut rem = mul(&reference_character(a), &reference_character(b));
    rem.retain(|e, _| dominant(family, e));
    let mut out = FormalSum::new();
    while let Some((top, &c)) = rem.iter().next_back() {
        let top = top.clone();
        assert!(c > 0, "negative multiplicity {c} at {top:?}");
        let label = IrrepLabel::new(family, a.rank(), top).unwrap();
        let mut ch = reference_character(&label);
        ch.retain(|e, _| dominant(family, e));
        add_into(&mut rem, &ch, -c);
        out.add(label, c as u64);
    }
    out
}

pub fn dimension_of(c: &Char) -> i64 {
    c.values().sum()
}

pub fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn sp(n: u32, w: &[i32]) -> IrrepLabel {
    IrrepLabel::sp(n, w).unwrap()
}

pub fn sp_of(n: u32, eta: &Partition) -> IrrepLabel {
    IrrepLabel::sp_partition(n, eta).unwrap()
}

/// All partitions with `|η| <= size` and at most `len` parts.
pub fn partitions(size: u32, len: usize) -> Vec<Partition> {
    partitions_up_to(size, len)
}

/// Pieri output relabelled as `Sp(n)` irreducibles.
pub fn as_sp(n: u32, sum: &FormalSum<Partition>) -> FormalSum<IrrepLabel> {
    sum.map(|eta| sp_of(n, eta))
}
