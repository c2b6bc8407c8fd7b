use serde::{Deserialize, Serialize};

use super::PathError;

/// Area word of a square path ending with an east step.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct AreaWord(Vec<i32>);

impl AreaWord {
    pub fn new(entries: Vec<i32>) -> Result<Self, PathError> {
        let ok = match (entries.first(), entries.last()) {
            (None, _) => true,
            (Some(&first), Some(&last)) => {
                first <= 0 && last >= 0 && entries.windows(2).all(|w| w[1] <= w[0] + 1)
            }
            _ => unreachable!(),
        };
        if ok {
            Ok(Self(entries))
        } else {
            Err(PathError::InvalidAreaWord(entries))
        }
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shift(&self) -> u32 {
        self.0.iter().min().map(|&m| (-m).max(0) as u32).unwrap_or(0)
    }

    pub fn is_dyck(&self) -> bool {
        self.shift() == 0
    }

    /// `a_i + shift` for each row.
    pub fn diagonals(&self) -> Vec<u32> {
        let s = self.shift() as i32;
        self.0.iter().map(|&a| (a + s) as u32).collect()
    }

    pub fn rises(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i] > self.0[i - 1])
            .map(|i| i + 1)
            .collect()
    }

    /// North/east step string; row `i` starts in column `i - 1 - a_i`.
    pub fn to_steps(&self) -> String {
        let n = self.0.len() as i32;
        let mut out = String::with_capacity(2 * self.0.len());
        let mut x = 0;
        for (i, &a) in self.0.iter().enumerate() {
            let col = i as i32 - a;
            while x < col {
                out.push('E');
                x += 1;
            }
            out.push('N');
        }
        while x < n {
            out.push('E');
            x += 1;
        }
        out
    }

    pub fn from_steps(steps: &str) -> Result<Self, PathError> {
        let mut x = 0i32;
        let mut entries = Vec::new();
        for ch in steps.chars() {
            match ch {
                'N' => {
                    let row = entries.len() as i32;
                    entries.push(row - x);
                }
                'E' => x += 1,
                _ => return Err(PathError::Parse(format!("bad step {ch:?}"))),
            }
        }
        let n = entries.len() as i32;
        if x != n || (n > 0 && !steps.ends_with('E')) {
            return Err(PathError::Parse(format!("{steps:?} is not a square path ending east")));
        }
        Self::new(entries)
    }

    /// All area words of size `n`, lexicographically increasing.
    pub fn all(n: usize) -> Vec<AreaWord> {
        fn rec(n: usize, cur: &mut Vec<i32>, out: &mut Vec<AreaWord>) {
            let i = cur.len();
            if i == n {
                if cur.last().map(|&l| l >= 0).unwrap_or(true) {
                    out.push(AreaWord(cur.clone()));
                }
                return;
            }
            // row i+1 can sit no lower than i+1-n, or the path cannot climb back
            let lo = i as i32 + 1 - n as i32;
            let hi = if i == 0 { 0 } else { cur[i - 1] + 1 };
            for a in lo..=hi {
                cur.push(a);
                rec(n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl TryFrom<Vec<i32>> for AreaWord {
    type Error = PathError;
    fn try_from(v: Vec<i32>) -> Result<Self, PathError> {
        Self::new(v)
    }
}

impl From<AreaWord> for Vec<i32> {
    fn from(a: AreaWord) -> Self {
        a.0
    }
}
