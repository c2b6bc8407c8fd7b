//! Constructive enumeration of the paths with a given diagonal word and
//! shift. A path is handled as its sequence of rows `(diagonal, label)`;
//! inserting a row never moves the diagonal of another row, which makes each
//! insertion step local.

use super::{MarkedWord, ScheduleError};
use crate::paths::{for_each_combination, AreaWord, DecoratedPath, DecorationKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Row {
    d: u32,
    label: u32,
    dec: bool,
}

type Seq = Vec<Row>;

/// All ways to put `z` identical items into `w` ordered slots.
fn compositions(z: u32, w: usize, mut f: impl FnMut(&[u32])) {
    fn rec(left: u32, slots: &mut Vec<u32>, w: usize, f: &mut dyn FnMut(&[u32])) {
        if slots.len() + 1 == w {
            slots.push(left);
            f(slots);
            slots.pop();
            return;
        }
        for take in 0..=left {
            slots.push(take);
            rec(left - take, slots, w, f);
            slots.pop();
        }
    }
    if w == 0 {
        if z == 0 {
            f(&[]);
        }
        return;
    }
    rec(z, &mut Vec::with_capacity(w), w, &mut f);
}

/// Inserts `counts[j]` copies of `row` at `slots[j]` (an index into `seq`).
fn place(seq: &Seq, slots: &[usize], counts: &[u32], row: Row) -> Seq {
    let mut out = seq.clone();
    let mut order: Vec<usize> = (0..slots.len()).collect();
    order.sort_by(|&a, &b| slots[b].cmp(&slots[a]));
    for j in order {
        for _ in 0..counts[j] {
            out.insert(slots[j], row);
        }
    }
    out
}

/// Inserts the `count` copies of the undecorated label `c` on diagonal `i`
/// in every admissible way.
fn insert_plain(seqs: Vec<Seq>, s: u32, i: u32, c: u32, count: u32) -> Vec<Seq> {
    let row = Row { d: i, label: c, dec: false };
    let mut out = Vec::new();
    for seq in seqs {
        let mut slots = Vec::new();
        if i == s && c > 0 {
            slots.push(0);
        }
        for (p, r) in seq.iter().enumerate() {
            if i >= s {
                // after a bigger label on the diagonal or a smaller one below it
                if (r.d == i && r.label > c) || (i > s && r.d + 1 == i && r.label < c) {
                    slots.push(p + 1);
                }
            } else if (r.d == i + 1 && r.label > c) || (r.d == i && r.label < c) {
                // before a bigger label above or a smaller one on the diagonal
                slots.push(p);
            }
        }
        compositions(count, slots.len(), |counts| {
            out.push(place(&seq, &slots, counts, row));
        });
    }
    out
}

/// Can a decorated row `x` sit at index `p` of `seq`?
fn fits(seq: &Seq, s: u32, p: usize, x: Row) -> bool {
    let (pd, pl) = if p == 0 {
        (s as i64 - 1, 0)
    } else {
        (seq[p - 1].d as i64, seq[p - 1].label)
    };
    let xd = x.d as i64;
    if !(xd < pd || (xd == pd && x.label > pl)) {
        return false;
    }
    match seq.get(p) {
        None => x.d >= s,
        Some(n) => {
            let nd = n.d as i64;
            if nd > xd + 1 || (nd == xd + 1 && n.label <= x.label) {
                return false;
            }
            !n.dec || nd < xd || (nd == xd && n.label > x.label)
        }
    }
}

/// Inserts `count` decorated copies of `c` on diagonal `i`: one per element
/// of a chosen subset `T` of the undecorated rows that would form an
/// inversion with it, placed in the gap next to that element.
fn insert_decorated(seqs: Vec<Seq>, s: u32, i: u32, c: u32, count: u32) -> Vec<Seq> {
    let x = Row { d: i, label: c, dec: true };
    let mut out = Vec::new();
    for seq in seqs {
        let sset: Vec<usize> = seq
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.dec && ((r.d == i + 1 && r.label > c) || (r.d == i && r.label < c)))
            .map(|(p, _)| p)
            .collect();
        for_each_combination(sset.len(), count as usize, |t| {
            // rightmost first, so earlier indices stay valid
            let mut partial = vec![seq.clone()];
            for &j in t.iter().rev() {
                let (lo, hi) = if i >= s {
                    (sset[j] + 1, sset.get(j + 1).copied().unwrap_or(seq.len()))
                } else {
                    (if j == 0 { 0 } else { sset[j - 1] + 1 }, sset[j])
                };
                let mut next = Vec::new();
                for cur in &partial {
                    // indices right of `hi` have shifted, but the gap itself has not
                    for p in lo..=hi {
                        if fits(cur, s, p, x) {
                            let mut v = cur.clone();
                            v.insert(p, x);
                            next.push(v);
                        }
                    }
                }
                partial = next;
            }
            out.extend(partial);
        });
    }
    out
}

/// Every path with diagonal word `z` and shift `s`, built run by run: the
/// main diagonal (largest labels first), the diagonals above it in
/// increasing order (largest first), those below it in decreasing order
/// (smallest first), and finally the decorated letters.
pub fn insertion_generate(z: &MarkedWord, s: u32) -> Result<Vec<DecoratedPath>, ScheduleError> {
    let unrealizable = || ScheduleError::UnrealizableWord { word: z.to_string(), shift: s };
    let ell = z.num_runs();
    if z.is_empty() {
        return if s == 0 { Ok(vec![DecoratedPath::new(AreaWord::empty(), vec![], DecorationKind::Valley, vec![])
            .expect("empty path is valid")]) } else { Err(unrealizable()) };
    }
    if s as usize >= ell {
        return Err(unrealizable());
    }
    let runs = super::run_multiplicities(z);
    let mut seqs: Vec<Seq> = vec![Vec::new()];
    let order = std::iter::once(s as usize)
        .chain(s as usize + 1..ell)
        .chain((0..s as usize).rev());
    for i in order {
        let mut labels: Vec<(u32, u32)> = runs[i].plain.iter().map(|(&c, &m)| (c, m)).collect();
        if i >= s as usize {
            labels.reverse();
        }
        for (c, m) in labels {
            seqs = insert_plain(seqs, s, i as u32, c, m);
        }
    }
    for i in (0..ell).rev() {
        for (&c, &m) in &runs[i].decorated {
            seqs = insert_decorated(seqs, s, i as u32, c, m);
        }
    }
    let mut out: Vec<DecoratedPath> = seqs
        .into_iter()
        .filter_map(|seq| {
            let area = AreaWord::new(seq.iter().map(|r| r.d as i32 - s as i32).collect()).ok()?;
            if area.shift() != s {
                return None;
            }
            let labels = seq.iter().map(|r| r.label).collect();
            let dec = (0..seq.len()).filter(|&p| seq[p].dec).map(|p| p + 1).collect();
            DecoratedPath::new(area, labels, DecorationKind::Valley, dec).ok()
        })
        .collect();
    if out.is_empty() {
        return Err(unrealizable());
    }
    out.sort();
    Ok(out)
}
