//! The alternative encoding in which zero labels are written as `∞` one
//! diagonal higher, and the pushing map back to ordinary zero labels.

use std::fmt;

use super::{AreaWord, DecoratedPath, DecorationKind, PathError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    /// Larger than every finite label.
    Infinity,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(v) => write!(f, "{v}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A valley-decorated path whose zero labels are encoded as `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfinityPath {
    area_word: AreaWord,
    labels: Vec<Label>,
    decorations: Vec<usize>,
}

fn contractible(a: &[i32], w: &[Label], i: usize) -> bool {
    if i == 0 {
        a[0] < -1 || (a[0] == -1 && w[0] > Label::Finite(0))
    } else {
        a[i] < a[i - 1] || (a[i] == a[i - 1] && w[i] > w[i - 1])
    }
}

impl InfinityPath {
    pub fn new(
        area_word: AreaWord,
        labels: Vec<Label>,
        mut decorations: Vec<usize>,
    ) -> Result<Self, PathError> {
        let bad = |m: String| Err(PathError::InvalidEncoding(m));
        let a = area_word.entries();
        if labels.len() != a.len() {
            return bad("label count differs from path size".into());
        }
        if labels.contains(&Label::Finite(0)) {
            return bad("zero labels must be written as infinity".into());
        }
        let low = -(area_word.shift() as i32);
        for i in 0..a.len() {
            if labels[i] == Label::Infinity && a[i] == low {
                return bad(format!("infinity on the base diagonal at row {}", i + 1));
            }
            if i > 0 && a[i] > a[i - 1] && labels[i] <= labels[i - 1] {
                return bad(format!("column not increasing at row {}", i + 1));
            }
        }
        decorations.sort_unstable();
        decorations.dedup();
        for &d in &decorations {
            if d == 0 || d > a.len() || !contractible(a, &labels, d - 1) {
                return bad(format!("row {d} is not a contractible valley"));
            }
        }
        Ok(Self { area_word, labels, decorations })
    }

    pub fn area_word(&self) -> &AreaWord {
        &self.area_word
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn decorations(&self) -> &[usize] {
        &self.decorations
    }

    pub fn area(&self) -> u32 {
        self.area_word.diagonals().iter().sum()
    }

    /// Dinv with `∞` as the largest label; `∞`s below the main diagonal earn
    /// no bonus.
    pub fn dinv(&self) -> i64 {
        let a = self.area_word.entries();
        let w = &self.labels;
        let dv = &self.decorations;
        let mut total = 0i64;
        for i in 0..a.len() {
            if dv.contains(&(i + 1)) {
                continue;
            }
            for j in i + 1..a.len() {
                if (a[i] == a[j] && w[i] < w[j]) || (a[i] == a[j] + 1 && w[i] > w[j]) {
                    total += 1;
                }
            }
        }
        let bonus = (0..a.len())
            .filter(|&i| a[i] < 0 && matches!(w[i], Label::Finite(v) if v > 0))
            .count() as i64;
        total + bonus - dv.len() as i64
    }
}

/// Moves each `∞` one step right (one diagonal down) and relabels it `0`.
pub fn push_zeros(p: &InfinityPath) -> Result<DecoratedPath, PathError> {
    let a: Vec<i32> = p
        .area_word
        .entries()
        .iter()
        .zip(&p.labels)
        .map(|(&x, l)| if *l == Label::Infinity { x - 1 } else { x })
        .collect();
    let labels: Vec<u32> = p
        .labels
        .iter()
        .map(|l| match l {
            Label::Finite(v) => *v,
            Label::Infinity => 0,
        })
        .collect();
    let aw = AreaWord::new(a).map_err(|e| PathError::InvalidEncoding(e.to_string()))?;
    DecoratedPath::new(aw, labels, DecorationKind::Valley, p.decorations.clone())
        .map_err(|e| PathError::InvalidEncoding(e.to_string()))
}

/// Inverse of [`push_zeros`].
pub fn pull_zeros(p: &DecoratedPath) -> Result<InfinityPath, PathError> {
    if p.kind() == DecorationKind::Rise && !p.decorations().is_empty() {
        return Err(PathError::InvalidEncoding("rise decorations are not supported".into()));
    }
    let a: Vec<i32> = p
        .area_word()
        .entries()
        .iter()
        .zip(p.labels())
        .map(|(&x, &l)| if l == 0 { x + 1 } else { x })
        .collect();
    let labels = p
        .labels()
        .iter()
        .map(|&l| if l == 0 { Label::Infinity } else { Label::Finite(l) })
        .collect();
    let aw = AreaWord::new(a).map_err(|e| PathError::InvalidEncoding(e.to_string()))?;
    InfinityPath::new(aw, labels, p.decorations().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate, Family, FamilySpec};

    const SAMPLE: [i32; 8] = [0, -3, -3, -2, -2, -1, 0, 0];

    #[test]
    fn sample_push() {
        use Label::*;
        let pre = AreaWord::new(vec![0, -2, -3, -2, -1, -1, 0, 0]).unwrap();
        let labels = vec![
            Finite(2), Infinity, Finite(2), Finite(4), Infinity, Finite(1), Finite(3), Finite(4),
        ];
        let p = InfinityPath::new(pre, labels, vec![2, 8]).unwrap();
        let pushed = push_zeros(&p).unwrap();
        assert_eq!(pushed.area_word().entries(), &SAMPLE);
        assert_eq!(pushed.labels(), &[2, 0, 2, 4, 0, 1, 3, 4]);
        assert_eq!(p.dinv(), pushed.dinv());
        assert_eq!(p.dinv(), 5);
        assert_eq!(p.area(), 15);
        assert_eq!(pushed.area(), 13);
        assert_eq!(pull_zeros(&pushed).unwrap(), p);
    }

    #[test]
    fn zero_free_paths_are_fixed() {
        let spec = FamilySpec::valley(Family::Lsq, 0, 3, 1);
        for p in enumerate(&spec).unwrap() {
            let inf = pull_zeros(&p).unwrap();
            assert_eq!(inf.area_word(), p.area_word());
            assert_eq!(push_zeros(&inf).unwrap(), p);
        }
    }

    #[test]
    fn rejects_bad_encodings() {
        use Label::*;
        let aw = AreaWord::new(vec![0, 0]).unwrap();
        assert!(InfinityPath::new(aw.clone(), vec![Finite(1), Finite(0)], vec![]).is_err());
        // infinity on the base diagonal
        let aw = AreaWord::new(vec![-1, 0]).unwrap();
        assert!(InfinityPath::new(aw, vec![Infinity, Finite(1)], vec![]).is_err());
    }
}
