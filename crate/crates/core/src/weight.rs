//! Double-headed weights and their combinatorics.
//!
//! A `DoubleWeight` is a pair of finitely-supported integer sequences: the
//! head prescribes fundamental-weight coefficients counted from the start of
//! the diagram, the tail counts them backwards from the free end. One such
//! pair instantiates to a weight of every member of the series, which is what
//! makes "the same representation at every level" meaningful.
//!
//! The key invariants live here: the box-count function classifying the coset
//! of the root lattice, the profile of a box-zero element in the simple-root
//! basis (fixed left block, constant middle string, fixed right block), the
//! depth, the induced partial order, and finite interval enumeration.

use crate::diagram::{LevelAlgebra, MarkedDiagram};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Finitely-supported integer sequence; trailing zeros are never stored, so
/// structural equality is sequence equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SupportSeq(Vec<i64>);

impl SupportSeq {
    pub fn new(mut entries: Vec<i64>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        SupportSeq(entries)
    }

    pub fn zero() -> Self {
        SupportSeq(Vec::new())
    }

    /// The sequence with a single 1 at (0-based) position `i`.
    pub fn unit(i: usize) -> Self {
        let mut v = vec![0; i + 1];
        v[i] = 1;
        SupportSeq(v)
    }

    /// Number of entries up to the last nonzero one (the paper's length).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }
}

impl Add for &SupportSeq {
    type Output = SupportSeq;
    fn add(self, rhs: &SupportSeq) -> SupportSeq {
        let len = self.0.len().max(rhs.0.len());
        SupportSeq::new((0..len).map(|i| self.get(i) + rhs.get(i)).collect())
    }
}

impl Sub for &SupportSeq {
    type Output = SupportSeq;
    fn sub(self, rhs: &SupportSeq) -> SupportSeq {
        let len = self.0.len().max(rhs.0.len());
        SupportSeq::new((0..len).map(|i| self.get(i) - rhs.get(i)).collect())
    }
}

impl Neg for &SupportSeq {
    type Output = SupportSeq;
    fn neg(self) -> SupportSeq {
        SupportSeq::new(self.0.iter().map(|&v| -v).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightFile {
    head: Vec<i64>,
    tail: Vec<i64>,
}

/// An element of the double-headed weight space: head coefficients indexed
/// from the diagram start, tail coefficients indexed backwards from the free
/// end. Dominant means all entries nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DoubleWeight {
    head: SupportSeq,
    tail: SupportSeq,
}

impl DoubleWeight {
    pub fn new(head: SupportSeq, tail: SupportSeq) -> Self {
        DoubleWeight { head, tail }
    }

    pub fn zero() -> Self {
        DoubleWeight::default()
    }

    pub fn from_entries(head: Vec<i64>, tail: Vec<i64>) -> Self {
        DoubleWeight::new(SupportSeq::new(head), SupportSeq::new(tail))
    }

    pub fn head(&self) -> &SupportSeq {
        &self.head
    }

    pub fn tail(&self) -> &SupportSeq {
        &self.tail
    }

    pub fn is_zero(&self) -> bool {
        self.head.is_zero() && self.tail.is_zero()
    }

    pub fn is_dominant(&self) -> bool {
        self.head.is_nonnegative() && self.tail.is_nonnegative()
    }

    /// The series length `len(tail) + max(d, len(head))` over a seed with
    /// `d` nodes; the level from which the stabilization machinery reads
    /// this weight consistently.
    pub fn length(&self, d: usize) -> usize {
        self.tail.len() + d.max(self.head.len())
    }

    /// Smallest level at which the head and tail supports fit without
    /// overlapping. Instantiation is defined from here on (the worked E-type
    /// decompositions read tail weights already at the seed level, below the
    /// series length).
    pub fn min_level(&self, d: usize) -> usize {
        d.max(self.head.len() + self.tail.len())
    }

    /// Tail box count `sum_j j y_j` (1-based positions).
    pub fn tail_boxes(&self) -> i64 {
        self.tail
            .entries()
            .iter()
            .enumerate()
            .map(|(j, &y)| (j as i64 + 1) * y)
            .sum()
    }

    /// Parses the CLI shorthand `h1,h2,../t1,t2,..`; either side may be
    /// empty, and a missing slash means a head-only weight.
    pub fn parse(text: &str) -> Result<Self> {
        fn side(text: &str) -> Result<Vec<i64>> {
            if text.trim().is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad weight entry {tok:?}")))
                })
                .collect()
        }
        let text = text.trim();
        if text.starts_with('{') {
            return Self::from_json(text);
        }
        match text.split_once('/') {
            Some((h, t)) => Ok(Self::from_entries(side(h)?, side(t)?)),
            None => Ok(Self::from_entries(side(text)?, Vec::new())),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: WeightFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("weight: {e}")))?;
        Ok(Self::from_entries(file.head, file.tail))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "head": self.head.entries(),
            "tail": self.tail.entries(),
        })
    }

    /// Coordinate vector (coroot pairings) of this weight at the given level.
    pub fn instantiate(&self, alg: &LevelAlgebra) -> Result<InstantiatedWeight> {
        let n = alg.n();
        let required = self.min_level(alg.base().d());
        if n < required {
            return Err(Error::LevelTooSmall { n, required });
        }
        let coords = (0..n)
            .map(|i| self.head.get(i) + self.tail.get(n - 1 - i))
            .collect();
        Ok(InstantiatedWeight { n, coords })
    }
}

impl fmt::Display for DoubleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &SupportSeq| {
            s.entries()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}/{}", join(&self.head), join(&self.tail))
    }
}

impl Add for &DoubleWeight {
    type Output = DoubleWeight;
    fn add(self, rhs: &DoubleWeight) -> DoubleWeight {
        DoubleWeight::new(&self.head + &rhs.head, &self.tail + &rhs.tail)
    }
}

impl Sub for &DoubleWeight {
    type Output = DoubleWeight;
    fn sub(self, rhs: &DoubleWeight) -> DoubleWeight {
        DoubleWeight::new(&self.head - &rhs.head, &self.tail - &rhs.tail)
    }
}

/// A weight pinned to a level, stored as its pairings with the simple
/// coroots. This is the only representation downstream code consumes, which
/// keeps degenerate levels (`det(X_n) = 0`) usable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InstantiatedWeight {
    n: usize,
    coords: Vec<i64>,
}

impl InstantiatedWeight {
    pub fn from_coords(coords: Vec<i64>) -> Self {
        InstantiatedWeight { n: coords.len(), coords }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&v| v >= 0)
    }
}

/// Number of boxes `|lambda|_X = sum a_i x_i - delta * sum i y_i`; the
/// integer classifying which coset of the root lattice the instantiations
/// occupy at every non-degenerate level.
pub fn boxes(weight: &DoubleWeight, x: &MarkedDiagram) -> Result<i64> {
    x.require_extensible()?;
    let a = x.a_sequence(weight.head.len())?;
    let head: i64 = weight
        .head
        .entries()
        .iter()
        .zip(&a)
        .map(|(&xi, &ai)| ai * xi)
        .sum();
    Ok(head - x.delta() * weight.tail_boxes())
}

/// The simple-root coefficients of a box-zero element, valid at every level:
/// a fixed left block `p`, a middle string of the constant `s`, and a fixed
/// right block `q` (stored with `q[0]` at the last node).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootProfile {
    p: Vec<i64>,
    s: i64,
    q: Vec<i64>,
    l: usize,
    r: usize,
}

impl RootProfile {
    pub fn p(&self) -> &[i64] {
        &self.p
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn q(&self) -> &[i64] {
        &self.q
    }

    /// Width of the fixed left block plus one (the first string node).
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_nonnegative(&self) -> bool {
        self.s >= 0 && self.p.iter().all(|&v| v >= 0) && self.q.iter().all(|&v| v >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.s == 0 && self.p.iter().all(|&v| v == 0) && self.q.iter().all(|&v| v == 0)
    }

    /// Reassembles the coefficient vector at level `n >= l + r`: positions
    /// `0..l-1` from `p`, the string of `s` on `l-1..=n-r`, and `q[j-1]` at
    /// position `n-j`.
    pub fn assemble(&self, n: usize) -> Result<Vec<i64>> {
        if n < self.l + self.r {
            return Err(Error::LevelTooSmall { n, required: self.l + self.r });
        }
        let mut coeffs = vec![0i64; n];
        coeffs[..self.l - 1].copy_from_slice(&self.p);
        for c in coeffs.iter_mut().take(n - self.r + 1).skip(self.l - 1) {
            *c = self.s;
        }
        for (j, &qv) in self.q.iter().enumerate() {
            coeffs[n - 1 - j] = qv;
        }
        Ok(coeffs)
    }

    /// Height of the assembled root at level `n` (sum of the coefficients).
    pub fn height_at(&self, n: usize) -> i64 {
        let left: i64 = self.p.iter().sum();
        let right: i64 = self.q.iter().sum();
        let string_len = (n - self.r + 1) as i64 - (self.l as i64 - 1);
        left + right + self.s * string_len
    }
}

/// Computes the profile of a box-zero element by one exact linear solve at
/// the smallest non-degenerate level, then verifies the two closed forms of
/// the string constant.
pub fn profile(gamma: &DoubleWeight, x: &MarkedDiagram) -> Result<RootProfile> {
    let b = boxes(gamma, x)?;
    if b != 0 {
        return Err(Error::BoxesNonzero { boxes: b });
    }
    let d = x.d();
    let l = d.max(gamma.head.len());
    let r = gamma.tail.len().max(1);
    // at most one level of the series is degenerate
    let m = if x.det_at(l + r) != 0 { l + r } else { l + r + 1 };
    let alg = x.extend(m)?;
    let coords = gamma.instantiate(&alg)?;
    let coeffs = alg
        .root_coefficients(coords.coords())
        .ok_or_else(|| Error::NonIntegralSolution {
            context: format!("profile of {gamma} over {}", x.name()),
        })?;
    let s = coeffs[l - 1];
    for (i, &c) in coeffs.iter().enumerate().take(m - r + 1).skip(l - 1) {
        if c != s {
            return Err(Error::NonIntegralSolution {
                context: format!("string region not constant at node {}", i + 1),
            });
        }
    }
    let p = coeffs[..l - 1].to_vec();
    let q: Vec<i64> = (1..r).map(|j| coeffs[m - j]).collect();
    // both closed forms of s: delta*s = sum a_i x_i and s = sum j y_j
    let a = x.a_sequence(gamma.head.len())?;
    let head_sum: i64 = gamma
        .head
        .entries()
        .iter()
        .zip(&a)
        .map(|(&xi, &ai)| ai * xi)
        .sum();
    if s * x.delta() != head_sum || s != gamma.tail_boxes() {
        return Err(Error::NonIntegralSolution {
            context: format!("closed forms for the string constant disagree on {gamma}"),
        });
    }
    Ok(RootProfile { p, s, q, l, r })
}

/// The depth of a box-zero element: the constant of the middle string.
pub fn depth(gamma: &DoubleWeight, x: &MarkedDiagram) -> Result<i64> {
    Ok(profile(gamma, x)?.s)
}

/// Partial order: `lower <= upper` iff the box counts agree and the profile
/// of the difference has all coefficients nonnegative.
pub fn leq(lower: &DoubleWeight, upper: &DoubleWeight, x: &MarkedDiagram) -> Result<bool> {
    if boxes(upper, x)? != boxes(lower, x)? {
        return Ok(false);
    }
    let pf = profile(&(upper - lower), x)?;
    Ok(pf.is_nonnegative())
}

/// All dominant double-headed weights between `upper` and `lower`.
///
/// Works at `n = l + r + 2s` (bumped past a degenerate level): coefficient
/// vectors `0 <= b <= assemble(profile(upper - lower))` are enumerated with
/// `b` constant on the middle window, keeping only those whose shifted weight
/// is dominant, and each survivor is lifted back to a double-headed weight
/// from its end-supported coordinates.
pub fn interval(
    upper: &DoubleWeight,
    lower: &DoubleWeight,
    x: &MarkedDiagram,
) -> Result<Vec<DoubleWeight>> {
    x.require_extensible()?;
    let diff = upper - lower;
    let pf = match profile(&diff, x) {
        Ok(pf) => pf,
        Err(Error::BoxesNonzero { .. }) => return Err(Error::NotComparable),
        Err(e) => return Err(e),
    };
    if !pf.is_nonnegative() || !upper.is_dominant() || !lower.is_dominant() {
        return Err(Error::NotComparable);
    }
    let s = pf.s as usize;
    let (l, r) = (pf.l, pf.r);
    let mut n = l + r + 2 * s;
    if x.det_at(n) == 0 {
        n += 1;
    }
    let alg = x.extend(n)?;
    let cap = pf.assemble(n)?;
    let lower_coords = lower.instantiate(&alg)?.coords().to_vec();

    // window of forced-constant coefficients, 0-based inclusive
    let win_lo = l + s - 1;
    let win_hi = n - r - s;
    // assignment order: left block, whole window at once, right block
    let order_of_node = |k: usize| -> usize {
        if k < win_lo {
            k
        } else if k <= win_hi {
            win_lo
        } else {
            win_lo + 1 + (k - win_hi - 1)
        }
    };
    let num_orders = win_lo + 1 + (n - 1 - win_hi);
    // dominance constraint at node j becomes checkable once every neighbor
    // is assigned
    let mut checks_at: Vec<Vec<usize>> = vec![Vec::new(); num_orders];
    for j in 0..n {
        let latest = (0..n)
            .filter(|&k| alg.cartan()[j][k] != 0)
            .map(order_of_node)
            .max()
            .unwrap();
        checks_at[latest].push(j);
    }

    let mut found: Vec<DoubleWeight> = Vec::new();
    let mut b = vec![0i64; n];
    enumerate_box(
        &alg,
        &cap,
        &lower_coords,
        (win_lo, win_hi),
        &checks_at,
        0,
        num_orders,
        &mut b,
        &mut |coords: &[i64]| {
            debug_assert!(coords[win_lo + 1..win_hi].iter().all(|&v| v == 0));
            let head = SupportSeq::new(coords[..=win_lo].to_vec());
            let tail = SupportSeq::new((1..=r + s).map(|j| coords[n - j]).collect());
            found.push(DoubleWeight::new(head, tail));
        },
    );
    found.sort();
    found.dedup();
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_box(
    alg: &LevelAlgebra,
    cap: &[i64],
    base: &[i64],
    window: (usize, usize),
    checks_at: &[Vec<usize>],
    order: usize,
    num_orders: usize,
    b: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    let n = alg.n();
    if order == num_orders {
        let coords: Vec<i64> = (0..n)
            .map(|j| base[j] + (0..n).map(|k| alg.cartan()[j][k] * b[k]).sum::<i64>())
            .collect();
        emit(&coords);
        return;
    }
    let (win_lo, win_hi) = window;
    let nodes: Vec<usize> = if order < win_lo {
        vec![order]
    } else if order == win_lo {
        (win_lo..=win_hi).collect()
    } else {
        vec![win_hi + (order - win_lo)]
    };
    let max = cap[nodes[0]];
    for v in 0..=max {
        for &k in &nodes {
            b[k] = v;
        }
        let ok = checks_at[order].iter().all(|&j| {
            base[j] + (0..n).map(|k| alg.cartan()[j][k] * b[k]).sum::<i64>() >= 0
        });
        if ok {
            enumerate_box(alg, cap, base, window, checks_at, order + 1, num_orders, b, emit);
        }
    }
    for &k in &nodes {
        b[k] = 0;
    }
}

/// Canonical ordering key used for serialized tables: grade (box count),
/// then head, then tail, both lexicographic.
pub fn table_key(weight: &DoubleWeight, x: &MarkedDiagram) -> (i64, Vec<i64>, Vec<i64>) {
    let grade = boxes(weight, x).unwrap_or(i64::MAX);
    (
        grade,
        weight.head.entries().to_vec(),
        weight.tail.entries().to_vec(),
    )
}

pub fn compare_for_table(a: &DoubleWeight, b: &DoubleWeight, x: &MarkedDiagram) -> Ordering {
    table_key(a, x).cmp(&table_key(b, x))
}
