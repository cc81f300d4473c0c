//! Monomials and monomial ideals in `k[x_1, ..., x_n]`.
//!
//! Ideals are always stored by their minimal generators in canonical order,
//! so two ideals are equal exactly when their generator lists are equal.
//! The coefficient field never enters: every operation here is the same in
//! any characteristic.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("monomial has {found} variables, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("variable index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("product would form {requested} raw generators, budget is {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("generator {0} is not a product of two distinct variables")]
    NotAnEdge(String),
    #[error("line {line}: cannot parse monomial {text:?}: {msg}")]
    Parse { line: usize, text: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exponent vector of a monomial; position `i - 1` holds the exponent of `x_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable x{i} outside 1..={n}");
        let mut m = Self::one(n);
        m.exps[i - 1] = 1;
        m
    }

    /// `x_W`, the product of the variables indexed by `w`.
    pub fn from_set(w: &VertexSet) -> Self {
        let mut m = Self::one(w.universe());
        for i in w {
            m.exps[i - 1] = 1;
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn deg(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.exps[i - 1] > 0).collect()
    }

    /// Support as a vertex set; `None` when `n` exceeds the mask width.
    pub fn support_set(&self) -> Option<VertexSet> {
        if self.n() > crate::vertex_set::MAX_VERTICES {
            return None;
        }
        VertexSet::from_labels(self.n(), self.support())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Multiplies in `x_i` once.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i - 1] += 1;
        m
    }

    /// Parses `"x1*x3^2*x7"` (or `"1"`) over `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Self, IdealError> {
        let vars = parse_factors(text).map_err(|msg| IdealError::Parse {
            line: 0,
            text: text.to_string(),
            msg,
        })?;
        let mut m = Self::one(n);
        for (i, e) in vars {
            if i == 0 || i > n {
                return Err(IdealError::IndexOutOfRange { index: i, n });
            }
            m.exps[i - 1] += e;
        }
        Ok(m)
    }
}

/// Splits monomial text into `(index, exponent)` factors.
fn parse_factors(text: &str) -> Result<Vec<(usize, u32)>, String> {
    let t = text.trim();
    if t == "1" {
        return Ok(Vec::new());
    }
    if t.is_empty() {
        return Err("empty monomial".into());
    }
    t.split('*')
        .map(|factor| {
            let f = factor.trim();
            let rest = f
                .strip_prefix('x')
                .ok_or_else(|| format!("factor {f:?} does not start with 'x'"))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|e| format!("{f:?}: {e}"))?),
                None => (rest, 1),
            };
            let idx = idx.parse::<usize>().map_err(|e| format!("{f:?}: {e}"))?;
            Ok((idx, exp))
        })
        .collect()
}

impl Ord for Monomial {
    /// Graded order: lower total degree first; within a degree, exponent
    /// vectors compare lexicographically in reverse, so `x1` precedes `x2`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cap on the number of raw pairwise products formed by [`MonomialIdeal::product`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealBudget {
    pub max_products: usize,
}

impl Default for IdealBudget {
    fn default() -> Self {
        IdealBudget {
            max_products: 4_000_000,
        }
    }
}

/// A monomial ideal, stored by its minimal generators in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Keeps exactly the divisibility-minimal monomials of `raw`.
    pub fn minimalize<I>(n: usize, raw: I) -> Result<Self, IdealError>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = Vec::new();
        for m in raw {
            if m.n() != n {
                return Err(IdealError::LengthMismatch {
                    expected: n,
                    found: m.n(),
                });
            }
            all.push(m);
        }
        Ok(Self::minimalize_unchecked(n, all))
    }

    fn minimalize_unchecked(n: usize, mut all: Vec<Monomial>) -> Self {
        all.sort();
        all.dedup();
        // a divisor has no larger degree, so it is already kept when its
        // multiples come up
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// The maximal homogeneous ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::minimalize_unchecked(n, (1..=n).map(|i| Monomial::var(n, i)).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check(&self, f: &Monomial) -> Result<(), IdealError> {
        if f.n() != self.n {
            Err(IdealError::LengthMismatch {
                expected: self.n,
                found: f.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Membership: some generator divides `f`.
    pub fn contains(&self, f: &Monomial) -> Result<bool, IdealError> {
        self.check(f)?;
        Ok(self.gens.iter().any(|g| g.divides(f)))
    }

    pub fn product(&self, other: &Self, budget: IdealBudget) -> Result<Self, IdealError> {
        if other.n != self.n {
            return Err(IdealError::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let requested = self.gens.len().saturating_mul(other.gens.len());
        if requested > budget.max_products {
            return Err(IdealError::BudgetExceeded {
                requested,
                budget: budget.max_products,
            });
        }
        let mut raw = Vec::with_capacity(requested);
        for g in &self.gens {
            for h in &other.gens {
                raw.push(g.mul(h));
            }
        }
        Ok(Self::minimalize_unchecked(self.n, raw))
    }

    /// `I^t` by repeated multiplication.
    pub fn power(&self, t: u32, budget: IdealBudget) -> Result<Self, IdealError> {
        if t == 0 {
            return Err(IdealError::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self, budget)?;
        }
        Ok(acc)
    }

    /// `I : f`, generated by `g / gcd(g, f)` over the generators `g`.
    pub fn colon(&self, f: &Monomial) -> Result<Self, IdealError> {
        self.check(f)?;
        Ok(Self::minimalize_unchecked(
            self.n,
            self.gens.iter().map(|g| g.strip(f)).collect(),
        ))
    }

    pub fn is_maximal_ideal(&self) -> bool {
        self.gens.len() == self.n
            && self
                .gens
                .iter()
                .all(|g| g.total_degree() == 1)
    }

    /// `ρ_i(I)`: the largest exponent of `x_i` among the minimal generators.
    pub fn i_degree(&self, i: usize) -> Result<u32, IdealError> {
        if i == 0 || i > self.n {
            return Err(IdealError::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(self.gens.iter().map(|g| g.deg(i)).max().unwrap_or(0))
    }

    /// One generator per line, canonical order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for g in &self.gens {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses the one-monomial-per-line format. `#` starts a comment. With
    /// `n = None`, the ambient ring is the largest variable index seen.
    pub fn parse_text(text: &str, n: Option<usize>) -> Result<Self, IdealError> {
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let l = line.split('#').next().unwrap_or("").trim();
            if l.is_empty() {
                continue;
            }
            let factors = parse_factors(l).map_err(|msg| IdealError::Parse {
                line: lineno + 1,
                text: l.to_string(),
                msg,
            })?;
            raw.push(factors);
        }
        let n = n.unwrap_or_else(|| {
            raw.iter()
                .flat_map(|fs| fs.iter().map(|&(i, _)| i))
                .max()
                .unwrap_or(0)
        });
        let mut mons = Vec::with_capacity(raw.len());
        for factors in raw {
            let mut m = Monomial::one(n);
            for (i, e) in factors {
                if i == 0 || i > n {
                    return Err(IdealError::IndexOutOfRange { index: i, n });
                }
                m.exps[i - 1] += e;
            }
            mons.push(m);
        }
        Self::minimalize(n, mons)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// `NI(G) = (x_{N[i]} : i ∈ V(G))`.
pub fn closed_neighborhood_ideal(g: &Graph) -> MonomialIdeal {
    MonomialIdeal::minimalize_unchecked(
        g.n(),
        (1..=g.n()).map(|v| Monomial::from_set(&g.closed_nbhd(v))).collect(),
    )
}

/// `I(G) = (x_u x_v : uv ∈ E(G))`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    MonomialIdeal::minimalize_unchecked(
        n,
        g.edges()
            .into_iter()
            .map(|(u, v)| Monomial::var(n, u).mul(&Monomial::var(n, v)))
            .collect(),
    )
}

/// Inverse of [`edge_ideal`]: every generator must be `x_u x_v` with `u != v`.
pub fn graph_from_edge_ideal(ideal: &MonomialIdeal) -> Result<Graph, IdealError> {
    let mut edges = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        let supp = g.support();
        if !g.is_squarefree() || supp.len() != 2 {
            return Err(IdealError::NotAnEdge(g.to_string()));
        }
        edges.push((supp[0], supp[1]));
    }
    Ok(Graph::from_edge_list(ideal.n(), &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cycle;

    fn m(text: &str, n: usize) -> Monomial {
        Monomial::parse(text, n).unwrap()
    }

    fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g, n))).unwrap()
    }

    #[test]
    fn monomial_text() {
        let a = m("x1*x3^2*x7", 7);
        assert_eq!(a.exponents(), &[1, 0, 2, 0, 0, 0, 1]);
        assert_eq!(a.to_string(), "x1*x3^2*x7");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(m("1", 3), Monomial::one(3));
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x1^", 3).is_err());
        assert!(Monomial::parse("", 3).is_err());
    }

    #[test]
    fn canonical_order() {
        let mut v = [m("x2", 3), m("x1*x2", 3), m("x1", 3), m("x3^2", 3), m("1", 3)];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["1", "x1", "x2", "x1*x2", "x3^2"]);
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(3, &["x1*x2", "x1*x2*x3"]), ideal(3, &["x1*x2"]));
        assert_eq!(ideal(2, &["x1", "x1"]).generators().len(), 1);
        let err = MonomialIdeal::minimalize(3, [Monomial::one(2)]);
        assert!(matches!(err, Err(IdealError::LengthMismatch { .. })));
    }

    #[test]
    fn membership() {
        let i = ideal(5, &["x1*x2"]);
        assert!(i.contains(&m("x1*x2*x5", 5)).unwrap());
        assert!(!i.contains(&m("x1*x5", 5)).unwrap());
        assert!(i.contains(&Monomial::one(4)).is_err());
    }

    #[test]
    fn products_and_powers() {
        let sq = ideal(2, &["x1*x2"]).power(2, IdealBudget::default()).unwrap();
        assert_eq!(sq, ideal(2, &["x1^2*x2^2"]));
        let p = ideal(2, &["x1"]).product(&ideal(2, &["x2"]), IdealBudget::default());
        assert_eq!(p.unwrap(), ideal(2, &["x1*x2"]));
        let i = ideal(2, &["x1", "x2"]);
        assert_eq!(i.power(1, IdealBudget::default()).unwrap(), i);
        assert_eq!(i.power(0, IdealBudget::default()), Err(IdealError::ZeroPower));
        let tight = IdealBudget { max_products: 3 };
        assert!(matches!(
            i.power(2, tight),
            Err(IdealError::BudgetExceeded { requested: 4, budget: 3 })
        ));
    }

    #[test]
    fn colon_examples() {
        let i = ideal(3, &["x1*x2", "x2*x3"]);
        assert_eq!(i.colon(&m("x2", 3)).unwrap(), ideal(3, &["x1", "x3"]));
        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);
        assert_eq!(i.colon(&m("x1*x2", 3)).unwrap(), ideal(3, &["1"]));
    }

    #[test]
    fn maximal_ideal() {
        assert!(MonomialIdeal::maximal(10).is_maximal_ideal());
        let nine = MonomialIdeal::minimalize(10, (1..=9).map(|i| Monomial::var(10, i))).unwrap();
        assert!(!nine.is_maximal_ideal());
    }

    #[test]
    fn i_degrees() {
        let i = ideal(3, &["x1^2*x2", "x1*x3"]);
        assert_eq!(i.i_degree(1).unwrap(), 2);
        assert_eq!(i.i_degree(2).unwrap(), 1);
        assert!(i.i_degree(4).is_err());
        let c5 = cycle(5).unwrap();
        let ni = closed_neighborhood_ideal(&c5);
        assert!((1..=5).all(|i| ni.i_degree(i).unwrap() == 1));
        let sq = ni.power(2, IdealBudget::default()).unwrap();
        // x1 lies in N[1], N[2], N[5]: (x1x2x5)(x1x2x3) is minimal
        assert_eq!(sq.i_degree(1).unwrap(), 2);
    }

    #[test]
    fn neighborhood_ideal_of_c5() {
        let ni = closed_neighborhood_ideal(&cycle(5).unwrap());
        assert_eq!(
            ni,
            ideal(5, &["x1*x2*x5", "x1*x2*x3", "x2*x3*x4", "x3*x4*x5", "x1*x4*x5"])
        );
        let full = Monomial::from_set(&VertexSet::full(5));
        let sq = ni.power(2, IdealBudget::default()).unwrap();
        assert!(!sq.contains(&full).unwrap());
        assert!((1..=5).all(|i| sq.contains(&full.times_var(i)).unwrap()));
    }

    #[test]
    fn edge_ideal_roundtrip() {
        let k2 = Graph::from_edge_list(2, &[(1, 2)]).unwrap();
        assert_eq!(edge_ideal(&k2), ideal(2, &["x1*x2"]));
        assert_eq!(graph_from_edge_ideal(&edge_ideal(&k2)).unwrap(), k2);
        assert!(matches!(
            graph_from_edge_ideal(&ideal(3, &["x1^2"])),
            Err(IdealError::NotAnEdge(_))
        ));
        assert!(graph_from_edge_ideal(&ideal(3, &["x1*x2*x3"])).is_err());
    }

    #[test]
    fn ideal_text() {
        let text = "# comment\nx1*x2\n\nx2*x3  # trailing\n";
        let i = MonomialIdeal::parse_text(text, None).unwrap();
        assert_eq!(i.n(), 3);
        assert_eq!(i.to_text(), "x1*x2\nx2*x3\n");
        assert_eq!(MonomialIdeal::parse_text(&i.to_text(), Some(3)).unwrap(), i);
        let e = MonomialIdeal::parse_text("x1\nz2\n", None).unwrap_err();
        assert!(matches!(e, IdealError::Parse { line: 2, .. }));
    }
}
