//! Exact multivariate polynomial arithmetic over ℤ, with resultants and
//! discriminants.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero
//! arbitrary-precision integer coefficients, over an ordered list of named
//! variables (`a1`, `b2`, `t3`, `x1`, ...). Equality is structural after
//! normalization; printing uses graded lexicographic term order. The
//! resultant is the Sylvester determinant, computed fraction-free; the
//! discriminant convention is fixed so that
//! `disc(∏(x − a_i)) = ∏_{i<j}(a_i − a_j)²` holds identically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};

use crate::{Error, Result};

/// Compares variable names by (alphabetic prefix, numeric suffix), so that
/// `a2 < a10 < b1 < t2 < x1`.
fn var_key(name: &str) -> (String, Option<u64>) {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (alpha, digits) = name.split_at(split);
    (alpha.to_string(), digits.parse().ok())
}

pub fn var_cmp(a: &str, b: &str) -> Ordering {
    var_key(a).cmp(&var_key(b))
}

/// Sparse multivariate polynomial with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    /// Canonically sorted, minimal variable list.
    vars: Vec<String>,
    /// Exponent vector (aligned with `vars`) → nonzero coefficient.
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { vars: vec![], terms: BTreeMap::new() }
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> MPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![], c);
        }
        MPoly { vars: vec![], terms }
    }

    pub fn one() -> MPoly {
        MPoly::constant(1)
    }

    pub fn var(name: &str) -> MPoly {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], BigInt::one());
        MPoly { vars: vec![name.to_string()], terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0u32; self.vars.len()]).is_some_and(One::is_one)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Drops unused variables and zero coefficients; keeps `vars` sorted.
    fn normalize(mut self) -> MPoly {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| used[i]).collect();
        if keep.len() != self.vars.len() {
            let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
            let terms = self
                .terms
                .into_iter()
                .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c))
                .collect();
            return MPoly { vars, terms };
        }
        self
    }

    /// Aligns two polynomials over the union of their variables.
    fn unify(&self, other: &MPoly) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        let mut merged: Vec<String> = self.vars.iter().chain(&other.vars).cloned().collect();
        merged.sort_by(|a, b| var_cmp(a, b));
        merged.dedup();
        let pos = |v: &str| merged.iter().position(|m| m == v).unwrap();
        let map_a: Vec<usize> = self.vars.iter().map(|v| pos(v)).collect();
        let map_b: Vec<usize> = other.vars.iter().map(|v| pos(v)).collect();
        (merged, map_a, map_b)
    }

    fn remap(terms: &BTreeMap<Vec<u32>, BigInt>, map: &[usize], width: usize) -> BTreeMap<Vec<u32>, BigInt> {
        terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u32; width];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let (vars, map_a, map_b) = self.unify(other);
        let mut terms = MPoly::remap(&self.terms, &map_a, vars.len());
        for (e, c) in MPoly::remap(&other.terms, &map_b, vars.len()) {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        MPoly { vars, terms }.normalize()
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        let (vars, map_a, map_b) = self.unify(other);
        let a = MPoly::remap(&self.terms, &map_a, vars.len());
        let b = MPoly::remap(&other.terms, &map_b, vars.len());
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        MPoly { vars, terms }.normalize()
    }

    pub fn scale<T: Into<BigInt>>(&self, k: T) -> MPoly {
        self.mul(&MPoly::constant(k))
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = divisor·q`, or `None`.
    ///
    /// Works over a fixed variable universe with raw term maps; each step
    /// cancels the graded-lex leading term, which strictly decreases, so
    /// the loop terminates.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let (vars, map_a, map_b) = self.unify(divisor);
        let width = vars.len();
        let mut rem = MPoly::remap(&self.terms, &map_a, width);
        let div = MPoly::remap(&divisor.terms, &map_b, width);
        let (dlt_e, dlt_c) = {
            let (e, c) = div.iter().max_by(|(e1, _), (e2, _)| grlex(e1, e2)).unwrap();
            (e.clone(), c.clone())
        };
        let mut quot: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        while !rem.is_empty() {
            let (rlt_e, rlt_c) = {
                let (e, c) = rem.iter().max_by(|(e1, _), (e2, _)| grlex(e1, e2)).unwrap();
                (e.clone(), c.clone())
            };
            if rlt_e.iter().zip(&dlt_e).any(|(r, d)| r < d) {
                return None;
            }
            if (&rlt_c % &dlt_c) != BigInt::zero() {
                return None;
            }
            let qe: Vec<u32> = rlt_e.iter().zip(&dlt_e).map(|(r, d)| r - d).collect();
            let qc = &rlt_c / &dlt_c;
            for (e, c) in &div {
                let te: Vec<u32> = e.iter().zip(&qe).map(|(x, y)| x + y).collect();
                let entry = rem.entry(te.clone()).or_insert_with(BigInt::zero);
                *entry -= &qc * c;
                if entry.is_zero() {
                    rem.remove(&te);
                }
            }
            quot.insert(qe, qc);
        }
        Some(MPoly { vars, terms: quot }.normalize())
    }

    /// Degree in one variable (0 when the variable is absent).
    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: &str, k: u32) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return if k == 0 { self.clone() } else { MPoly::zero() };
        };
        let terms: BTreeMap<Vec<u32>, BigInt> = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] == k)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] = 0;
                (ne, c.clone())
            })
            .collect();
        MPoly { vars: self.vars.clone(), terms }.normalize()
    }

    /// Partial derivative.
    pub fn derivative(&self, var: &str) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return MPoly::zero();
        };
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            terms.insert(ne, c * BigInt::from(e[i]));
        }
        MPoly { vars: self.vars.clone(), terms }.normalize()
    }

    /// Substitutes one variable by a polynomial, via Horner evaluation.
    pub fn substitute_one(&self, var: &str, replacement: &MPoly) -> MPoly {
        if !self.vars.iter().any(|v| v == var) {
            return self.clone();
        }
        let max = self.degree_in(var);
        let mut acc = self.coeff_of(var, max);
        for k in (0..max).rev() {
            acc = acc.mul(replacement).add(&self.coeff_of(var, k));
        }
        acc
    }

    /// Simultaneous substitution: variables named in `bindings` are replaced
    /// by the given polynomials, exactly and fully expanded. Variables not
    /// mentioned are left alone.
    pub fn substitute(&self, bindings: &BTreeMap<String, MPoly>) -> MPoly {
        let relevant: Vec<&String> =
            self.vars.iter().filter(|v| bindings.contains_key(*v)).collect();
        if relevant.is_empty() {
            return self.clone();
        }
        // Fast path: no replacement mentions a substituted variable, so
        // sequential single-variable Horner substitution is equivalent.
        let sequential_ok = bindings
            .iter()
            .all(|(_, rep)| rep.vars.iter().all(|v| !bindings.contains_key(v)));
        if sequential_ok {
            let mut acc = self.clone();
            for v in relevant {
                acc = acc.substitute_one(v, &bindings[v]);
            }
            return acc;
        }
        // General simultaneous path, term by term with cached powers.
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let factor = match bindings.get(&self.vars[i]) {
                    Some(rep) => cache
                        .entry((i, exp))
                        .or_insert_with(|| rep.pow(exp))
                        .clone(),
                    None => {
                        let mut t = BTreeMap::new();
                        t.insert(vec![exp], BigInt::one());
                        MPoly { vars: vec![self.vars[i].clone()], terms: t }
                    }
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// JSON term-list form: `{"vars": [...], "terms": [{"coeff": "...",
    /// "exps": [...]}]}` with string coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": self.vars,
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| serde_json::json!({"coeff": c.to_string(), "exps": e}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MPoly> {
        let bad = || Error::Parse("malformed polynomial JSON".into());
        let vars: Vec<String> = v
            .get("vars")
            .and_then(|x| x.as_array())
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let mut terms = BTreeMap::new();
        for t in v.get("terms").and_then(|x| x.as_array()).ok_or_else(bad)? {
            let coeff: BigInt = t
                .get("coeff")
                .and_then(|x| x.as_str())
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            let exps: Vec<u32> = t
                .get("exps")
                .and_then(|x| x.as_array())
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_u64().map(|n| n as u32).ok_or_else(bad))
                .collect::<Result<_>>()?;
            if exps.len() != vars.len() {
                return Err(bad());
            }
            terms.insert(exps, coeff);
        }
        Ok(MPoly { vars, terms }.normalize())
    }
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        for (pos, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            if pos == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parses the printed grammar: signed terms of `*`-joined factors, each
    /// factor an integer, a variable, or `var^exp`.
    fn from_str(s: &str) -> Result<MPoly> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pos = 0;
        let mut result = MPoly::zero();
        let mut sign = BigInt::one();
        let mut expect_term = true;
        if chars[0] == '-' {
            sign = -sign;
            pos = 1;
        } else if chars[0] == '+' {
            pos = 1;
        }
        while pos < chars.len() {
            if !expect_term {
                match chars[pos] {
                    '+' => sign = BigInt::one(),
                    '-' => sign = -BigInt::one(),
                    c => return Err(Error::Parse(format!("expected + or -, got `{c}`"))),
                }
                pos += 1;
                expect_term = true;
                continue;
            }
            // parse one term: factor ('*' factor)*
            let mut term = MPoly::constant(sign.clone());
            loop {
                let (factor, next) = parse_factor(&chars, pos)?;
                term = term.mul(&factor);
                pos = next;
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            result = result.add(&term);
            expect_term = false;
        }
        if expect_term {
            return Err(Error::Parse("dangling sign".into()));
        }
        Ok(result)
    }
}

fn parse_factor(chars: &[char], mut pos: usize) -> Result<(MPoly, usize)> {
    if pos >= chars.len() {
        return Err(Error::Parse("expected factor".into()));
    }
    if chars[pos].is_ascii_digit() {
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let num: BigInt = chars[start..pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse("bad integer".into()))?;
        return Ok((MPoly::constant(num), pos));
    }
    if chars[pos].is_ascii_alphabetic() {
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_alphabetic() {
            pos += 1;
        }
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let name: String = chars[start..pos].iter().collect();
        let mut exp = 1u32;
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let estart = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            exp = chars[estart..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse("bad exponent".into()))?;
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![exp], BigInt::one());
        return Ok((MPoly { vars: vec![name], terms }.normalize(), pos));
    }
    Err(Error::Parse(format!("unexpected character `{}`", chars[pos])))
}

/// The elementary symmetric polynomial `e_k` in the given variables.
pub fn elementary_symmetric(k: usize, vars: &[&str]) -> MPoly {
    assert!(k >= 1 && k <= vars.len(), "need 1 ≤ k ≤ number of variables");
    // DP: fold variables into e_0..e_k
    let mut e: Vec<MPoly> = (0..=k)
        .map(|j| if j == 0 { MPoly::one() } else { MPoly::zero() })
        .collect();
    for v in vars {
        let x = MPoly::var(v);
        for j in (1..=k).rev() {
            let bump = e[j - 1].mul(&x);
            e[j] = e[j].add(&bump);
        }
    }
    e.pop().unwrap()
}

/// Resultant of `f` and `g` with respect to `var`: the determinant of the
/// Sylvester matrix, computed fraction-free. Eliminates `var` exactly.
pub fn resultant(f: &MPoly, g: &MPoly, var: &str) -> Result<MPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    if m == 0 && n == 0 {
        return Ok(MPoly::one());
    }
    if m == 0 {
        return Ok(f.pow(n as u32));
    }
    if n == 0 {
        return Ok(g.pow(m as u32));
    }
    let size = m + n;
    let mut s: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(); size]; size];
    let fc: Vec<MPoly> = (0..=m).rev().map(|k| f.coeff_of(var, k as u32)).collect();
    let gc: Vec<MPoly> = (0..=n).rev().map(|k| g.coeff_of(var, k as u32)).collect();
    for r in 0..n {
        for (j, c) in fc.iter().enumerate() {
            s[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in gc.iter().enumerate() {
            s[n + r][r + j] = c.clone();
        }
    }
    Ok(bareiss_det(s))
}

/// Fraction-free determinant over ℤ[x₁,…]; all divisions are exact.
fn bareiss_det(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign_flip = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(src) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return MPoly::zero();
            };
            m.swap(k, src);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss intermediate division is exact");
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Discriminant of a polynomial monic in `var` of degree m ≥ 2:
/// `disc(f) = (−1)^{m(m−1)/2} · Res(f, ∂f/∂var)`. With this convention
/// `disc(∏(x − a_i)) = ∏_{i<j}(a_i − a_j)²` identically.
pub fn discriminant(f: &MPoly, var: &str) -> Result<MPoly> {
    let m = f.degree_in(var);
    if m < 2 || !f.coeff_of(var, m).is_one() {
        return Err(Error::NotMonic(var.to_string()));
    }
    let res = resultant(f, &f.derivative(var), var)?;
    if (m as u64) * (m as u64 - 1) / 2 % 2 == 1 {
        Ok(res.neg())
    } else {
        Ok(res)
    }
}

/// True iff `g = f·q` exactly for some polynomial `q`.
pub fn divides(f: &MPoly, g: &MPoly) -> bool {
    if f.is_zero() {
        return g.is_zero();
    }
    g.exact_div(f).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_symmetric_examples() {
        assert_eq!(elementary_symmetric(1, &["a1", "a2"]), p("a1 + a2"));
        assert_eq!(elementary_symmetric(2, &["a1", "a2"]), p("a1*a2"));
        assert_eq!(
            elementary_symmetric(2, &["a1", "a2", "a3"]),
            p("a1*a2 + a1*a3 + a2*a3")
        );
    }

    #[test]
    fn display_and_parse_roundtrip() {
        let f = p("x1^3 - 3*x1*t2 + t3");
        assert_eq!(f.to_string(), "x1^3 - 3*t2*x1 + t3");
        assert_eq!(f.to_string().parse::<MPoly>().unwrap(), f);
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-a1 - 1").to_string(), "-a1 - 1");
        assert_eq!(p("2*a1*a1"), p("2*a1^2"));
    }

    #[test]
    fn json_roundtrip() {
        let f = p("x1^3 - 3*x1*t2 + t3");
        let j = f.to_json();
        assert_eq!(MPoly::from_json(&j).unwrap(), f);
    }

    #[test]
    fn arithmetic_distributes() {
        // deterministic pseudo-random small polynomials
        let mut seed: u64 = 0x2545f4914f6cdd1d;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        let vars = ["a1", "a2", "t2"];
        let mut rand_poly = move || {
            let mut f = MPoly::zero();
            for _ in 0..4 {
                let mut term = MPoly::constant((next() % 9) as i64 - 4);
                for v in vars {
                    let e = (next() % 3) as u32;
                    if e > 0 {
                        term = term.mul(&MPoly::var(v).pow(e));
                    }
                }
                f = f.add(&term);
            }
            f
        };
        for _ in 0..20 {
            let f = rand_poly();
            let g = rand_poly();
            let h = rand_poly();
            assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
            assert_eq!(f.mul(&g), g.mul(&f));
            assert_eq!(f.sub(&f), MPoly::zero());
        }
    }

    #[test]
    fn resultant_linear() {
        let f = p("x - a");
        let g = p("x - b");
        assert_eq!(resultant(&f, &g, "x").unwrap(), p("a - b"));
    }

    #[test]
    fn resultant_hand_oracle() {
        // 3x3 Sylvester determinant of (x² + t, 2x) is 4t
        let f = p("x^2 + t");
        let g = p("2*x");
        assert_eq!(resultant(&f, &g, "x").unwrap(), p("4*t"));
    }

    #[test]
    fn resultant_errors_and_degenerate() {
        assert!(matches!(resultant(&MPoly::zero(), &p("x"), "x"), Err(Error::ZeroPolynomial)));
        // constant g: Res(f, c) = c^deg f
        assert_eq!(resultant(&p("x^2 + 1"), &p("3"), "x").unwrap(), p("9"));
    }

    #[test]
    fn resultant_multiplicative() {
        let f = p("x^2 + t2");
        let g = p("x - t3");
        let h = p("x^2 + x + 1");
        let lhs = resultant(&f.mul(&g), &h, "x").unwrap();
        let rhs = resultant(&f, &h, "x").unwrap().mul(&resultant(&g, &h, "x").unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn discriminant_quadratic() {
        // roots ±√(−t2): (r1 − r2)² = −4t2
        assert_eq!(discriminant(&p("x^2 + t2"), "x").unwrap(), p("-4*t2"));
    }

    #[test]
    fn discriminant_normalization() {
        let f = p("x - a1").mul(&p("x - a2"));
        assert_eq!(discriminant(&f, "x").unwrap(), p("a1 - a2").pow(2));
    }

    #[test]
    fn discriminant_depressed_cubic() {
        assert_eq!(
            discriminant(&p("x^3 + t2*x + t3"), "x").unwrap(),
            p("-4*t2^3 - 27*t3^2")
        );
    }

    #[test]
    fn discriminant_cubic_vs_root_differences() {
        // substitute the symmetric functions of three sum-zero roots into
        // −4t2³ − 27t3² and compare with ∏(a_i − a_j)²
        let a1 = MPoly::var("a1");
        let a2 = MPoly::var("a2");
        let a3 = a1.add(&a2).neg();
        // f = ∏(x − a_i) = x³ + t2 x + t3 with t2 = e2, t3 = −e3
        let e2 = a1.mul(&a2).add(&a1.mul(&a3)).add(&a2.mul(&a3));
        let e3 = a1.mul(&a2).mul(&a3);
        let disc = discriminant(&p("x^3 + t2*x + t3"), "x").unwrap();
        let bindings = BTreeMap::from([
            ("t2".to_string(), e2),
            ("t3".to_string(), e3.neg()),
        ]);
        let pulled = disc.substitute(&bindings);
        let target = a1.sub(&a2).pow(2).mul(&a1.sub(&a3).pow(2)).mul(&a2.sub(&a3).pow(2));
        assert_eq!(pulled, target);
    }

    #[test]
    fn discriminant_requires_monic() {
        assert!(matches!(discriminant(&p("2*x^2 + 1"), "x"), Err(Error::NotMonic(_))));
        assert!(matches!(discriminant(&p("x + 1"), "x"), Err(Error::NotMonic(_))));
    }

    #[test]
    fn substitution_examples() {
        let f = p("-4*t2");
        let bindings = BTreeMap::from([(
            "t2".to_string(),
            elementary_symmetric(2, &["a1", "a2"]),
        )]);
        assert_eq!(f.substitute(&bindings), p("-4*a1*a2"));
        // identity substitution
        let g = p("x1^2 + t2*x1");
        let idb = BTreeMap::from([("x1".to_string(), MPoly::var("x1"))]);
        assert_eq!(g.substitute(&idb), g);
    }

    #[test]
    fn simultaneous_substitution_swaps() {
        // x ↦ y, y ↦ x must swap, not chain
        let f = p("x^2 - y");
        let bindings = BTreeMap::from([
            ("x".to_string(), MPoly::var("y")),
            ("y".to_string(), MPoly::var("x")),
        ]);
        assert_eq!(f.substitute(&bindings), p("y^2 - x"));
    }

    #[test]
    fn divides_examples() {
        let d = p("a1 - a2");
        assert!(divides(&d, &d.pow(2)));
        assert!(!divides(&d, &p("a1 + a2")));
        assert!(divides(&p("a1"), &MPoly::zero()));
    }

    #[test]
    fn exact_div_reconstructs() {
        let f = p("x^2 + 2*x*y + y^2 - 1");
        let g = p("x + y - 1");
        let q = f.exact_div(&g).unwrap();
        assert_eq!(q.mul(&g), f);
        assert_eq!(q, p("x + y + 1"));
    }

    #[test]
    fn degree_and_coeff_views() {
        let f = p("x^3 + t2*x + t3");
        assert_eq!(f.degree_in("x"), 3);
        assert_eq!(f.coeff_of("x", 1), p("t2"));
        assert_eq!(f.coeff_of("x", 0), p("t3"));
        assert_eq!(f.coeff_of("x", 3), MPoly::one());
        assert_eq!(f.derivative("x"), p("3*x^2 + t2"));
        assert_eq!(f.derivative("zz"), MPoly::zero());
    }

    #[test]
    fn var_ordering() {
        assert_eq!(var_cmp("a2", "a10"), Ordering::Less);
        assert_eq!(var_cmp("a10", "b1"), Ordering::Less);
        assert_eq!(var_cmp("t2", "x1"), Ordering::Less);
        let f = p("x1*a2 + a10");
        assert_eq!(f.vars(), &["a2".to_string(), "a10".to_string(), "x1".to_string()]);
    }
}
