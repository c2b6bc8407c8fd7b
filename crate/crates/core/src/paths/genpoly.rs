use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{DecoratedPath, PathError};
use crate::partition::Partition;
use crate::qt::QTPoly;

/// Coefficients of the monomials `x^lambda`, one per content partition.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenPoly {
    terms: BTreeMap<Partition, QTPoly>,
}

/// First coefficient (in term order) where two generating polynomials differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientDiff {
    pub content: Partition,
    pub q: u32,
    pub t: u32,
    pub left: String,
    pub right: String,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    content: Vec<u32>,
    q: u32,
    t: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonGenPoly {
    terms: Vec<JsonTerm>,
}

impl GenPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, QTPoly)>) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, content: Partition, coeff: QTPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(content.clone()).or_insert_with(QTPoly::zero);
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&content);
        }
    }

    /// Coefficient of `x^content`; zero when absent.
    pub fn get(&self, content: &Partition) -> QTPoly {
        self.terms.get(content).cloned().unwrap_or_else(QTPoly::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn merge(&mut self, other: &GenPoly) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &QTPoly) -> GenPoly {
        GenPoly::from_terms(self.terms.iter().map(|(p, c)| (p.clone(), c * factor)))
    }

    /// Number of objects counted, i.e. the sum of all coefficients at `q = t = 1`.
    pub fn total(&self) -> BigRational {
        self.terms.values().map(|c| c.at_one()).sum()
    }

    pub fn first_difference(&self, other: &GenPoly) -> Option<CoefficientDiff> {
        let mut contents: Vec<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        contents.sort();
        contents.dedup();
        for content in contents {
            let (a, b) = (self.get(content), other.get(content));
            if a == b {
                continue;
            }
            let diff = &a - &b;
            let (&(q, t), _) = diff.terms().next().expect("nonzero difference");
            let show = |p: &QTPoly| p.coeff(q, t).to_string();
            return Some(CoefficientDiff {
                content: content.clone(),
                q,
                t,
                left: show(&a),
                right: show(&b),
            });
        }
        None
    }

    /// `{"terms":[{"content":[..],"q":..,"t":..,"coeff":".."},..]}`, sorted by
    /// (content, qexp, texp).
    pub fn to_json(&self) -> String {
        let mut terms = Vec::new();
        for (p, c) in &self.terms {
            for (&(q, t), v) in c.terms() {
                terms.push(JsonTerm { content: p.parts().to_vec(), q, t, coeff: v.to_string() });
            }
        }
        serde_json::to_string(&JsonGenPoly { terms }).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, PathError> {
        let parsed: JsonGenPoly =
            serde_json::from_str(s).map_err(|e| PathError::Parse(e.to_string()))?;
        let mut out = GenPoly::zero();
        for t in parsed.terms {
            let content = Partition::new(t.content)
                .map_err(|e| PathError::Parse(e.to_string()))?;
            let coeff: BigRational = t
                .coeff
                .parse()
                .map_err(|_| PathError::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(content, QTPoly::from_terms([(t.q, t.t, coeff)]));
        }
        Ok(out)
    }

    /// Human-readable rendering, one `m[..]` term per content.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("({c})*m{p}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Number of distinct rearrangements of `lambda` padded with zeros to `slots`.
fn rearrangements(lambda: &Partition, slots: usize) -> u128 {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for &p in lambda.parts() {
        *counts.entry(p).or_insert(0) += 1;
    }
    *counts.entry(0).or_insert(0) += (slots - lambda.len()) as u32;
    let fact = |k: u32| (1..=k as u128).product::<u128>();
    counts.values().fold(fact(slots as u32), |acc, &m| acc / fact(m))
}

/// `sum q^dinv t^area x^w` over the stream, collapsed to content partitions
/// after checking that coefficients depend only on the sorted content.
pub fn generating_polynomial<I: IntoIterator<Item = DecoratedPath>>(
    paths: I,
) -> Result<GenPoly, PathError> {
    let mut by_content: HashMap<Vec<u32>, HashMap<(u32, u32), i64>> = HashMap::new();
    let mut max_label = 0usize;
    for p in paths {
        let content = p.content();
        max_label = max_label.max(content.len());
        let dinv = u32::try_from(p.dinv()).expect("dinv is non-negative");
        *by_content
            .entry(content)
            .or_default()
            .entry((dinv, p.area()))
            .or_insert(0) += 1;
    }
    let mut groups: BTreeMap<Partition, Vec<(Vec<u32>, QTPoly)>> = BTreeMap::new();
    for (mut content, tally) in by_content {
        content.resize(max_label, 0);
        let poly = QTPoly::from_counts(tally);
        groups
            .entry(Partition::from_unsorted(content.clone()))
            .or_default()
            .push((content, poly));
    }
    let mut out = GenPoly::zero();
    for (lambda, members) in groups {
        let expected = rearrangements(&lambda, max_label);
        if members.len() as u128 != expected {
            return Err(PathError::Asymmetric(format!(
                "content {lambda} occurs in {} of {expected} arrangements",
                members.len()
            )));
        }
        let first = &members[0].1;
        if let Some((c, _)) = members.iter().find(|(_, p)| p != first) {
            return Err(PathError::Asymmetric(format!(
                "content {c:?} differs from its rearrangement {:?}",
                members[0].0
            )));
        }
        out.add_term(lambda, first.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate, Family, FamilySpec};

    #[test]
    fn json_round_trip_and_order() {
        let g = GenPoly::from_terms([
            (Partition::new(vec![2]).unwrap(), QTPoly::one()),
            (Partition::new(vec![1, 1]).unwrap(), "1 + q + t".parse().unwrap()),
        ]);
        let json = g.to_json();
        assert_eq!(
            json,
            r#"{"terms":[{"content":[1,1],"q":0,"t":0,"coeff":"1"},{"content":[1,1],"q":0,"t":1,"coeff":"1"},{"content":[1,1],"q":1,"t":0,"coeff":"1"},{"content":[2],"q":0,"t":0,"coeff":"1"}]}"#
        );
        assert_eq!(GenPoly::from_json(&json).unwrap(), g);
    }

    #[test]
    fn rearrangement_counts() {
        let p = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(rearrangements(&p(vec![1, 1]), 2), 1);
        assert_eq!(rearrangements(&p(vec![2]), 2), 2);
        assert_eq!(rearrangements(&p(vec![2, 1]), 3), 6);
        assert_eq!(rearrangements(&Partition::empty(), 0), 1);
    }

    #[test]
    fn asymmetric_streams_are_rejected() {
        let spec = FamilySpec::valley(Family::Ld, 0, 2, 0);
        assert!(generating_polynomial(enumerate(&spec).unwrap()).is_ok());
        // drop the paths labelled only by 2s: x_1^2 survives, x_2^2 does not
        let broken = enumerate(&spec).unwrap().filter(|p| p.labels() != [2, 2]);
        assert!(matches!(generating_polynomial(broken), Err(PathError::Asymmetric(_))));
    }

    #[test]
    fn first_difference_reports_lowest_term() {
        let a = GenPoly::from_terms([(Partition::new(vec![1]).unwrap(), "1 + q".parse().unwrap())]);
        let b = GenPoly::from_terms([(Partition::new(vec![1]).unwrap(), "1 + 2*q".parse().unwrap())]);
        let d = a.first_difference(&b).unwrap();
        assert_eq!((d.q, d.t, d.left.as_str(), d.right.as_str()), (1, 0, "1", "2"));
        assert!(a.first_difference(&a).is_none());
    }
}
