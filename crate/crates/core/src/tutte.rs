//! Tutte polynomials by deletion–contraction, f- and h-vectors of the
//! independence complex, and the degree-vector/h-vector cross-check.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use crate::coparking;
use crate::cycle_system::CycleSystem;
use crate::matroid::Matroid;
use crate::subset::Subset;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    /// coefficient of x^i y^j, keyed (i, j)
    pub coefficients: BTreeMap<(usize, usize), u64>,
}

impl TuttePolynomial {
    fn monomial(i: usize, j: usize) -> TuttePolynomial {
        TuttePolynomial {
            coefficients: BTreeMap::from([((i, j), 1)]),
        }
    }

    fn add_assign(&mut self, other: &TuttePolynomial) {
        for (&k, &v) in &other.coefficients {
            *self.coefficients.entry(k).or_insert(0) += v;
        }
    }

    pub fn eval(&self, x: u64, y: u64) -> u64 {
        self.coefficients
            .iter()
            .map(|(&(i, j), &c)| c * x.pow(i as u32) * y.pow(j as u32))
            .sum()
    }

    /// Coefficients of T(x, 1), lowest degree first.
    pub fn at_y1(&self) -> Vec<u64> {
        let top = self
            .coefficients
            .keys()
            .map(|&(i, _)| i)
            .max()
            .unwrap_or(0);
        let mut out = vec![0u64; top + 1];
        for (&(i, _), &c) in &self.coefficients {
            out[i] += c;
        }
        out
    }

    /// Swap x and y: the Tutte polynomial of the dual.
    pub fn transpose(&self) -> TuttePolynomial {
        TuttePolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&(i, j), &c)| ((j, i), c))
                .collect(),
        }
    }

    /// JSON object mapping "i,j" to the coefficient of x^i y^j.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .coefficients
            .iter()
            .map(|(&(i, j), &c)| (format!("{i},{j}"), serde_json::Value::from(c)))
            .collect();
        serde_json::Value::Object(map)
    }
}

pub fn tutte(m: &Matroid) -> Result<TuttePolynomial> {
    tutte_with_budget(m, None)
}

/// Deletion–contraction on the smallest non-bridge non-loop element; base
/// case x^(#bridges) y^(#loops). Minors are tracked as (present, contracted)
/// masks over the root ground set, which also serve as the memo key.
pub fn tutte_with_budget(m: &Matroid, limit: Option<Duration>) -> Result<TuttePolynomial> {
    let deadline = limit.map(|d| Instant::now() + d);
    let mut memo: HashMap<(Subset, Subset), TuttePolynomial> = HashMap::new();
    let present = m.ground().full_subset();
    let contracted = m.ground().empty_subset();
    rec(m, present, contracted, deadline, &mut memo)
}

fn rec(
    m: &Matroid,
    present: Subset,
    contracted: Subset,
    deadline: Option<Instant>,
    memo: &mut HashMap<(Subset, Subset), TuttePolynomial>,
) -> Result<TuttePolynomial> {
    if let Some(t) = memo.get(&(present.clone(), contracted.clone())) {
        return Ok(t.clone());
    }
    if let Some(d) = deadline {
        if Instant::now() > d {
            return Err(Error::Budget {
                message: "time budget exhausted during Tutte recursion".into(),
                levels_completed: 0,
            });
        }
    }
    // the minor's ground set and its rank function over the root matroid
    let alive = present.difference(&contracted);
    let r_contracted = m.rank(&contracted);
    let minor_rank = |s: &Subset| m.rank(&s.union(&contracted)) - r_contracted;
    let full_rank = minor_rank(&alive);
    let mut pivot = None;
    for e in alive.iter() {
        let is_loop = m.rank(&contracted.with(e)) == r_contracted;
        let is_bridge = !is_loop && minor_rank(&alive.without(e)) == full_rank - 1;
        if !is_loop && !is_bridge {
            pivot = Some(e);
            break;
        }
    }
    let result = match pivot {
        None => {
            // only loops and bridges remain: #bridges = rank, rest are loops
            TuttePolynomial::monomial(full_rank, alive.len() - full_rank)
        }
        Some(e) => {
            let mut t = rec(m, present.without(e), contracted.clone(), deadline, memo)?;
            let c = rec(m, present.clone(), contracted.with(e), deadline, memo)?;
            t.add_assign(&c);
            t
        }
    };
    memo.insert((present, contracted), result.clone());
    Ok(result)
}

/// h-vector: coefficients of T(x,1) reversed, padded to length r(M)+1.
pub fn h_vector(m: &Matroid) -> Result<Vec<u64>> {
    let t = tutte(m)?;
    let c = t.at_y1();
    let r = m.full_rank();
    Ok((0..=r)
        .map(|k| c.get(r - k).copied().unwrap_or(0))
        .collect())
}

/// f-vector: f_i = number of independent sets of cardinality i, i = 0..r(M).
pub fn f_vector(m: &Matroid) -> Vec<u64> {
    let r = m.full_rank();
    let mut f = vec![0u64; r + 1];
    let mut current = m.ground().empty_subset();
    count_independent(m, 0, &mut current, 0, &mut f);
    f
}

fn count_independent(m: &Matroid, next: usize, current: &mut Subset, size: usize, f: &mut [u64]) {
    f[size] += 1;
    for e in next..m.size() {
        current.insert(e);
        if size < f.len() - 1 && m.is_independent(current) {
            count_independent(m, e + 1, current, size + 1, f);
        }
        current.remove(e);
    }
}

/// Thm-level cross-check: the coparking degree histogram, zero-padded to
/// length r(M)+1, equals the h-vector.
pub fn check_main_theorem(m: &Matroid, cs: &CycleSystem) -> Result<bool> {
    let h = h_vector(m)?;
    let mut d: Vec<u64> = coparking::degree_vector(cs).iter().map(|&v| v as u64).collect();
    d.resize(h.len().max(d.len()), 0);
    let mut h = h;
    h.resize(d.len(), 0);
    Ok(d == h)
}
