//! Parametric generators for the quasi-filiform nilpotent Lie algebras of
//! maximum length and their solvable Leibniz extensions.
//!
//! Tables list one orientation of each product; products written as
//! `[e_i,x] = -[x,e_i] = v` and all nilpotent brackets are completed
//! antisymmetrically, while one-sided squares such as `[x,x] = δ e_k` are kept
//! as written. Omitted products are zero.
//!
//! Catalog ids are strings like `g1n1:n=7` or `R7_g1:n=5,b2=2`.
//!
//! | id | n | parameters (default) |
//! |----|---|----------------------|
//! | `g1n1` | odd, ≥ 5 | |
//! | `g2n1` | ≥ 5 | |
//! | `g3n1` | ≥ 7 | |
//! | `g1_7`, `g2_9`, `g3_11` | fixed | |
//! | `R1_g1` | as `g1n1` | `a2` (1), `b4`..`b{n-1}` (0; even `b_{2k}`, `2k ≤ n-3`, forced 0) |
//! | `R2_g1` | as `g1n1` | `a` = a_{n-1} (1) |
//! | `R3_g1`, `R4_g1` | as `g1n1` | `delta` (1) |
//! | `R5_g1` | as `g1n1` | `a` = a_n (1) |
//! | `R6_g1` | as `g1n1` | `a2` (1) |
//! | `R7_g1` | as `g1n1` | `b2` (2), excluded values `4-n, 3-n, (4-n)/2, (5-n)/2, 1` |
//! | `R1_g2` | as `g2n1` | `b4` (1), `b5`..`b{n-1}` (0) |
//! | `R2_g2` | as `g2n1` | `a2` (1) |
//! | `R3_g2` | as `g2n1` | `gamma` (1) |
//! | `R4_g2` | as `g2n1` | `delta` (1) |
//! | `R5_g2` | as `g2n1` | `b2` (2), excluded values `1, 5-n, 3-n` |
//! | `R_g3n1_1` | as `g3n1` | |
//! | `R_g1_7_1`, `R_g2_9_1`, `R_g3_11_1` | fixed | |
//! | `R_g1n1_2`, `R_g2n1_2` | as `g1n1` / `g2n1` | |

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{default_labels, Algebra, AlgebraBuilder, SeriesKind};
use crate::derivations::derivation_space;
use crate::linalg::{q, qi, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog family `{0}`")]
    UnknownFamily(String),
    #[error("malformed catalog id `{0}`")]
    Malformed(String),
    #[error("{family} requires {requirement}, got n = {n}")]
    BadDimension { family: Family, requirement: &'static str, n: usize },
    #[error("{family} needs an explicit n")]
    MissingN { family: Family },
    #[error("{family} has unknown parameter `{name}`")]
    UnknownParameter { family: Family, name: String },
    #[error("{family}: {message}")]
    Constraint { family: Family, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    G1n1,
    G2n1,
    G3n1,
    G1_7,
    G2_9,
    G3_11,
    R1G1,
    R2G1,
    R3G1,
    R4G1,
    R5G1,
    R6G1,
    R7G1,
    R1G2,
    R2G2,
    R3G2,
    R4G2,
    R5G2,
    RG3n1_1,
    RG1_7_1,
    RG2_9_1,
    RG3_11_1,
    RG1n1_2,
    RG2n1_2,
}

const FAMILY_NAMES: &[(Family, &str)] = &[
    (Family::G1n1, "g1n1"),
    (Family::G2n1, "g2n1"),
    (Family::G3n1, "g3n1"),
    (Family::G1_7, "g1_7"),
    (Family::G2_9, "g2_9"),
    (Family::G3_11, "g3_11"),
    (Family::R1G1, "R1_g1"),
    (Family::R2G1, "R2_g1"),
    (Family::R3G1, "R3_g1"),
    (Family::R4G1, "R4_g1"),
    (Family::R5G1, "R5_g1"),
    (Family::R6G1, "R6_g1"),
    (Family::R7G1, "R7_g1"),
    (Family::R1G2, "R1_g2"),
    (Family::R2G2, "R2_g2"),
    (Family::R3G2, "R3_g2"),
    (Family::R4G2, "R4_g2"),
    (Family::R5G2, "R5_g2"),
    (Family::RG3n1_1, "R_g3n1_1"),
    (Family::RG1_7_1, "R_g1_7_1"),
    (Family::RG2_9_1, "R_g2_9_1"),
    (Family::RG3_11_1, "R_g3_11_1"),
    (Family::RG1n1_2, "R_g1n1_2"),
    (Family::RG2n1_2, "R_g2n1_2"),
];

/// The nilpotent algebra a family is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nilradical {
    G1n1,
    G2n1,
    G3n1,
    G1_7,
    G2_9,
    G3_11,
}

impl Nilradical {
    pub fn family(self) -> Family {
        match self {
            Nilradical::G1n1 => Family::G1n1,
            Nilradical::G2n1 => Family::G2n1,
            Nilradical::G3n1 => Family::G3n1,
            Nilradical::G1_7 => Family::G1_7,
            Nilradical::G2_9 => Family::G2_9,
            Nilradical::G3_11 => Family::G3_11,
        }
    }

    pub fn all() -> [Nilradical; 6] {
        [
            Nilradical::G1n1,
            Nilradical::G2n1,
            Nilradical::G3n1,
            Nilradical::G1_7,
            Nilradical::G2_9,
            Nilradical::G3_11,
        ]
    }

    fn fixed_dim(self) -> Option<usize> {
        match self {
            Nilradical::G1_7 => Some(7),
            Nilradical::G2_9 => Some(9),
            Nilradical::G3_11 => Some(11),
            _ => None,
        }
    }

    /// Checks the dimension constraint of the nilpotent family.
    pub fn check_n(self, n: usize) -> Result<(), CatalogError> {
        let family = self.family();
        let bad = |requirement| Err(CatalogError::BadDimension { family, requirement, n });
        match self {
            Nilradical::G1n1 if n < 5 || n % 2 == 0 => bad("n >= 5 and n odd"),
            Nilradical::G2n1 if n < 5 => bad("n >= 5"),
            Nilradical::G3n1 if n < 7 => bad("n >= 7"),
            _ => match self.fixed_dim() {
                Some(d) if d != n => bad("the fixed dimension of this sporadic algebra"),
                _ => Ok(()),
            },
        }
    }

    /// Nonzero products `[e_i, e_j] = coef e_k` (1-based, one orientation).
    pub fn products(self, n: usize) -> Vec<(usize, usize, usize, Rational)> {
        let mut t = Vec::new();
        let sign = |i: usize| if i % 2 == 0 { qi(1) } else { qi(-1) };
        let filiform_chain = |t: &mut Vec<_>, upto: usize| {
            for i in 2..=upto {
                t.push((1, i, i + 1, qi(1)));
            }
        };
        match self {
            Nilradical::G1n1 => {
                filiform_chain(&mut t, n - 2);
                for i in 2..=(n - 1) / 2 {
                    t.push((i, n - i, n, sign(i)));
                }
            }
            Nilradical::G2n1 => {
                filiform_chain(&mut t, n - 2);
                for i in 2..=n - 3 {
                    t.push((i, n, i + 2, qi(1)));
                }
            }
            Nilradical::G3n1 => {
                filiform_chain(&mut t, n - 2);
                for i in 2..=n - 3 {
                    t.push((i, n, i + 2, qi(1)));
                }
                for i in 3..=n - 4 {
                    t.push((2, i, i + 3, qi(1)));
                }
            }
            Nilradical::G1_7 => {
                filiform_chain(&mut t, 5);
                for i in 3..=4 {
                    t.push((2, i, i + 2, qi(1)));
                }
                for i in 2..=3 {
                    t.push((i, 7 - i, 7, sign(i)));
                }
            }
            Nilradical::G2_9 => {
                filiform_chain(&mut t, 7);
                for i in 3..=4 {
                    t.push((2, i, i + 2, qi(1)));
                }
                t.push((2, 5, 7, qi(3)));
                t.push((2, 6, 8, qi(5)));
                for i in 4..=5 {
                    t.push((3, i, i + 3, qi(-2)));
                }
                for i in 2..=4 {
                    t.push((i, 9 - i, 9, sign(i)));
                }
            }
            Nilradical::G3_11 => {
                filiform_chain(&mut t, 9);
                for i in 3..=4 {
                    t.push((2, i, i + 2, qi(1)));
                }
                for i in 6..=7 {
                    t.push((2, i, i + 2, qi(-1)));
                }
                t.push((3, 7, 10, qi(-1)));
                for i in 4..=5 {
                    t.push((3, i, i + 3, qi(1)));
                }
                for i in 5..=6 {
                    t.push((4, i, i + 4, qi(1)));
                }
                for i in 2..=5 {
                    t.push((i, 11 - i, 11, sign(i)));
                }
            }
        }
        t
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        FAMILY_NAMES.iter().find(|(f, _)| *f == self).expect("every family is named").1
    }

    pub fn all() -> Vec<Family> {
        FAMILY_NAMES.iter().map(|(f, _)| *f).collect()
    }

    pub fn nilradical(self) -> Nilradical {
        use Family::*;
        match self {
            G1n1 | R1G1 | R2G1 | R3G1 | R4G1 | R5G1 | R6G1 | R7G1 | RG1n1_2 => Nilradical::G1n1,
            G2n1 | R1G2 | R2G2 | R3G2 | R4G2 | R5G2 | RG2n1_2 => Nilradical::G2n1,
            G3n1 | RG3n1_1 => Nilradical::G3n1,
            G1_7 | RG1_7_1 => Nilradical::G1_7,
            G2_9 | RG2_9_1 => Nilradical::G2_9,
            G3_11 | RG3_11_1 => Nilradical::G3_11,
        }
    }

    /// Dimension of the complement to the nilradical (0 for the nilpotent algebras).
    pub fn complement_dim(self) -> usize {
        use Family::*;
        match self {
            G1n1 | G2n1 | G3n1 | G1_7 | G2_9 | G3_11 => 0,
            RG1n1_2 | RG2n1_2 => 2,
            _ => 1,
        }
    }

    pub fn is_nilpotent_family(self) -> bool {
        self.complement_dim() == 0
    }

    pub fn has_fixed_dim(self) -> bool {
        self.nilradical().fixed_dim().is_some()
    }

    /// Families carrying a one-sided square `[x,x]`.
    pub fn has_square(self) -> bool {
        matches!(self, Family::R3G1 | Family::R4G1 | Family::R4G2)
    }

    /// Allowed parameter names for a given `n`, with defaults.
    pub fn parameters(self, n: usize) -> Vec<(String, Rational)> {
        use Family::*;
        let one = || qi(1);
        match self {
            R1G1 => {
                let mut p = vec![("a2".to_string(), one())];
                for k in 4..n {
                    p.push((format!("b{k}"), qi(0)));
                }
                p
            }
            R2G1 | R5G1 => vec![("a".into(), one())],
            R3G1 | R4G1 | R4G2 => vec![("delta".into(), one())],
            R6G1 | R2G2 => vec![("a2".into(), one())],
            R7G1 | R5G2 => vec![("b2".into(), qi(2))],
            R1G2 => (4..n).map(|k| (format!("b{k}"), if k == 4 { one() } else { qi(0) })).collect(),
            R3G2 => vec![("gamma".into(), one())],
            _ => vec![],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FAMILY_NAMES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(f, _)| *f)
            .ok_or_else(|| CatalogError::UnknownFamily(s.to_string()))
    }
}

/// A catalog entry: family, nilradical dimension `n`, and parameter overrides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalogId {
    pub family: Family,
    pub n: Option<usize>,
    pub params: BTreeMap<String, Rational>,
}

impl CatalogId {
    pub fn new(family: Family, n: Option<usize>) -> Self {
        Self {
            family,
            n,
            params: BTreeMap::new(),
        }
    }

    pub fn with_n(family: Family, n: usize) -> Self {
        Self::new(family, Some(n))
    }

    pub fn fixed(family: Family) -> Self {
        Self::new(family, None)
    }

    pub fn param(mut self, name: &str, value: Rational) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    /// Dimension of the nilradical.
    pub fn nilradical_dim(&self) -> Result<usize, CatalogError> {
        let nil = self.family.nilradical();
        let n = match (self.n, nil.fixed_dim()) {
            (Some(n), _) => n,
            (None, Some(d)) => d,
            (None, None) => return Err(CatalogError::MissingN { family: self.family }),
        };
        nil.check_n(n)?;
        Ok(n)
    }

    pub fn dim(&self) -> Result<usize, CatalogError> {
        Ok(self.nilradical_dim()? + self.family.complement_dim())
    }

    /// Basis indices (0-based) spanning the nilradical `e1..en`.
    pub fn nilradical_indices(&self) -> Result<Vec<usize>, CatalogError> {
        Ok((0..self.nilradical_dim()?).collect())
    }

    pub fn complement_indices(&self) -> Result<Vec<usize>, CatalogError> {
        let n = self.nilradical_dim()?;
        Ok((n..n + self.family.complement_dim()).collect())
    }

    /// Effective parameters: defaults overridden by explicit values.
    pub fn resolved_params(&self) -> Result<BTreeMap<String, Rational>, CatalogError> {
        let n = self.nilradical_dim()?;
        let mut out: BTreeMap<String, Rational> = self.family.parameters(n).into_iter().collect();
        for (k, v) in &self.params {
            match out.get_mut(k) {
                Some(slot) => *slot = v.clone(),
                None => {
                    return Err(CatalogError::UnknownParameter {
                        family: self.family,
                        name: k.clone(),
                    })
                }
            }
        }
        Ok(out)
    }

    fn check_parameter_constraints(&self, n: usize, p: &BTreeMap<String, Rational>) -> Result<(), CatalogError> {
        let family = self.family;
        let constraint = |message: String| Err(CatalogError::Constraint { family, message });
        let ni = n as i64;
        match family {
            Family::R7G1 => {
                let b2 = &p["b2"];
                let excluded = [qi(4 - ni), qi(3 - ni), q(4 - ni, 2), q(5 - ni, 2), qi(1)];
                if excluded.contains(b2) {
                    return constraint(format!(
                        "b2 = {b2} is excluded (b2 must avoid 4-n, 3-n, (4-n)/2, (5-n)/2, 1)"
                    ));
                }
            }
            Family::R5G2 => {
                let b2 = &p["b2"];
                if [qi(1), qi(5 - ni), qi(3 - ni)].contains(b2) {
                    return constraint(format!("b2 = {b2} is excluded (b2 must avoid 1, 5-n, 3-n)"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn check_structural_params(&self, n: usize, p: &BTreeMap<String, Rational>) -> Result<(), CatalogError> {
        if self.family == Family::R1G1 {
            for k in (2..).take_while(|k| 2 * k <= n - 3) {
                let name = format!("b{}", 2 * k);
                if !p[&name].is_zero() {
                    return Err(CatalogError::Constraint {
                        family: self.family,
                        message: format!("{name} must vanish (b_2k = 0 for 2 <= k <= (n-3)/2)"),
                    });
                }
            }
        }
        Ok(())
    }

    /// Builds the algebra, enforcing every constraint of the family.
    pub fn build(&self) -> Result<Algebra, CatalogError> {
        let n = self.nilradical_dim()?;
        let p = self.resolved_params()?;
        self.check_structural_params(n, &p)?;
        self.check_parameter_constraints(n, &p)?;
        Ok(build_table(self.family, n, &p))
    }

    /// Builds without the excluded-value lists (used to reach degenerate members,
    /// e.g. `R7_g1` at `b2 = 4 - n`). Dimension and `b_2k` constraints still apply.
    pub fn build_relaxed(&self) -> Result<Algebra, CatalogError> {
        let n = self.nilradical_dim()?;
        let p = self.resolved_params()?;
        self.check_structural_params(n, &p)?;
        Ok(build_table(self.family, n, &p))
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        for (k, v) in &self.params {
            parts.push(format!("{k}={v}"));
        }
        if !parts.is_empty() {
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for CatalogId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = match s.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b)),
            None => (s.trim(), None),
        };
        let mut id = CatalogId::new(name.parse()?, None);
        if let Some(rest) = rest {
            for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (k, v) = part.split_once('=').ok_or_else(|| CatalogError::Malformed(s.to_string()))?;
                let (k, v) = (k.trim(), v.trim());
                if k == "n" {
                    id.n = Some(v.parse().map_err(|_| CatalogError::Malformed(s.to_string()))?);
                } else {
                    let val: Rational = v.parse().map_err(|_| CatalogError::Malformed(s.to_string()))?;
                    id.params.insert(k.to_string(), val);
                }
            }
        }
        Ok(id)
    }
}

/// Helper for extension tables: 1-based `e_i`, `x = n + 1`, `y = n + 2`.
struct Table {
    b: AlgebraBuilder,
    n: usize,
}

impl Table {
    fn new(n: usize, complement: usize) -> Self {
        let b = Algebra::builder(n + complement).labels(default_labels(n, complement));
        Self { b, n }
    }

    fn x(&self) -> usize {
        self.n + 1
    }

    fn y(&self) -> usize {
        self.n + 2
    }

    fn lie(&mut self, i: usize, j: usize, k: usize, v: Rational) {
        self.b.antisym(i - 1, j - 1, k - 1, v);
    }

    /// `[e_i, z] = -[z, e_i] = Σ coef e_k`.
    fn act(&mut self, i: usize, z: usize, terms: &[(usize, Rational)]) {
        for (k, v) in terms {
            if !v.is_zero() {
                self.b.add(i - 1, z - 1, k - 1, v.clone());
                self.b.add(z - 1, i - 1, k - 1, -v);
            }
        }
    }

    /// Diagonal action `[e_i, z] = -[z, e_i] = w e_i`.
    fn diag(&mut self, i: usize, z: usize, w: Rational) {
        self.act(i, z, &[(i, w)]);
    }

    fn square(&mut self, z: usize, k: usize, v: Rational) {
        self.b.add(z - 1, z - 1, k - 1, v);
    }

    fn finish(self) -> Algebra {
        self.b.build().expect("catalog tables are well formed")
    }
}

fn build_table(family: Family, n: usize, p: &BTreeMap<String, Rational>) -> Algebra {
    use Family::*;
    let mut t = Table::new(n, family.complement_dim());
    for (i, j, k, v) in family.nilradical().products(n) {
        t.lie(i, j, k, v);
    }
    let x = t.x();
    let ni = n as i64;
    let par = |name: &str| p[name].clone();
    match family {
        G1n1 | G2n1 | G3n1 | G1_7 | G2_9 | G3_11 => {}
        R1G1 => {
            let a2 = par("a2");
            t.act(1, x, &[(2, a2.clone())]);
            for i in 2..=n - 2 {
                let mut terms = vec![(i, qi(1))];
                for tt in i + 2..=n - 1 {
                    terms.push((tt, par(&format!("b{}", tt - i + 2))));
                }
                t.act(i, x, &terms);
            }
            t.act(n - 1, x, &[(n - 1, qi(1)), (n, a2)]);
            t.diag(n, x, qi(2));
        }
        R2G1 => {
            t.act(1, x, &[(1, qi(1)), (n - 1, par("a"))]);
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 + 2 - ni));
            }
            t.diag(n, x, qi(4 - ni));
        }
        R3G1 => {
            t.diag(1, x, qi(1));
            for i in 2..=n - 2 {
                t.diag(i, x, qi(i as i64 + 1 - ni));
            }
            t.diag(n, x, qi(2 - ni));
            t.square(x, n - 1, par("delta"));
        }
        R4G1 => {
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64) - q(ni, 2));
            }
            t.square(x, n, par("delta"));
        }
        R5G1 => {
            t.act(1, x, &[(1, qi(1)), (n, par("a"))]);
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64) + q(1 - ni, 2));
            }
            t.diag(n, x, qi(1));
        }
        R6G1 => {
            let a2 = par("a2");
            t.act(1, x, &[(1, qi(1)), (2, a2.clone())]);
            for i in 2..=n - 2 {
                t.diag(i, x, qi(i as i64 - 1));
            }
            t.act(n - 1, x, &[(n - 1, qi(ni - 2)), (n, a2)]);
            t.diag(n, x, qi(ni - 2));
        }
        R7G1 => {
            let b2 = par("b2");
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 - 2) + &b2);
            }
            t.diag(n, x, qi(ni - 4) + qi(2) * &b2);
        }
        R1G2 => {
            for i in 2..=n - 1 {
                let mut terms = vec![(i, qi(1))];
                for tt in i + 2..=n - 1 {
                    terms.push((tt, par(&format!("b{}", tt - i + 2))));
                }
                t.act(i, x, &terms);
            }
        }
        R2G2 => {
            let a2 = par("a2");
            t.act(1, x, &[(1, qi(1)), (2, a2.clone())]);
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 - 1));
            }
            t.act(n, x, &[(3, -a2), (n, qi(2))]);
        }
        R3G2 => {
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 + 3 - ni));
            }
            t.act(n, x, &[(n - 1, par("gamma")), (n, qi(2))]);
        }
        R4G2 => {
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 + 1 - ni));
            }
            t.diag(n, x, qi(2));
            t.square(x, n - 1, par("delta"));
        }
        R5G2 => {
            let b2 = par("b2");
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 - 2) + &b2);
            }
            t.diag(n, x, qi(2));
        }
        RG3n1_1 => {
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 + 1));
            }
            t.diag(n, x, qi(2));
        }
        RG1_7_1 | RG2_9_1 | RG3_11_1 => {
            for i in 1..=n {
                t.diag(i, x, qi(i as i64));
            }
        }
        RG1n1_2 | RG2n1_2 => {
            let y = t.y();
            t.diag(1, x, qi(1));
            for i in 2..=n - 1 {
                t.diag(i, x, qi(i as i64 - 2));
                t.diag(i, y, qi(1));
            }
            if family == RG1n1_2 {
                t.diag(n, x, qi(ni - 4));
                t.diag(n, y, qi(2));
            } else {
                t.diag(n, x, qi(2));
            }
        }
    }
    t.finish()
}

/// Computed isomorphism invariants used to compare catalog members.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub leibniz: bool,
    pub lie: bool,
    pub lower_central_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub right_annihilator_dim: usize,
    pub derivation_dim: usize,
}

impl Fingerprint {
    pub fn compute(a: &Algebra) -> Self {
        Self {
            dim: a.dim(),
            leibniz: a.is_leibniz(),
            lie: a.is_lie(),
            lower_central_dims: a.series(SeriesKind::LowerCentral).dims(),
            derived_dims: a.series(SeriesKind::Derived).dims(),
            center_dim: a.center().dim(),
            right_annihilator_dim: a.right_annihilator().dim(),
            derivation_dim: derivation_space(a).dim(),
        }
    }
}

/// What the classification asserts about a suite member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub dim: usize,
    /// `Some(dim - 1)` for the nilpotent algebras, `None` for the non-nilpotent extensions.
    pub nil_index: Option<usize>,
    pub lie: bool,
    /// Claimed `dim H²(R,R)` for Lie algebras where the classification states it.
    pub h2_lie: Option<usize>,
    /// Claimed `dim HL²(R,R)` for the algebras asserted to be rigid.
    pub hl2: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SuiteEntry {
    pub id: CatalogId,
    pub expected: Expected,
}

impl CatalogId {
    pub fn expected(&self) -> Result<Expected, CatalogError> {
        use Family::*;
        let dim = self.dim()?;
        let p = self.resolved_params()?;
        let lie = match self.family {
            R3G1 | R4G1 | R4G2 => p["delta"].is_zero(),
            _ => true,
        };
        let (h2_lie, hl2) = match self.family {
            RG1n1_2 | RG2n1_2 => (Some(0), Some(0)),
            RG3n1_1 | RG1_7_1 | RG2_9_1 | RG3_11_1 => (Some(1), None),
            _ => (None, None),
        };
        Ok(Expected {
            dim,
            nil_index: self.family.is_nilpotent_family().then(|| dim - 1),
            lie,
            h2_lie,
            hl2,
        })
    }
}

/// Valid `n` among `ns` for a family (all of them are ignored for fixed-dimension families).
pub fn valid_ns(family: Family, ns: &[usize]) -> Vec<Option<usize>> {
    if family.has_fixed_dim() {
        return vec![None];
    }
    ns.iter()
        .copied()
        .filter(|&n| family.nilradical().check_n(n).is_ok())
        .map(Some)
        .collect()
}

/// Every family at every valid `n` in `ns`, default (normalized) parameters.
pub fn suite_for(ns: &[usize]) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    for family in Family::all() {
        for n in valid_ns(family, ns) {
            let id = CatalogId::new(family, n);
            let expected = id.expected().expect("valid by construction");
            out.push(SuiteEntry { id, expected });
        }
    }
    out
}

/// The fixed suite: `n ∈ {5, 7, 9}` where valid, sporadic algebras at their dimension.
pub fn default_suite() -> Vec<SuiteEntry> {
    suite_for(&[5, 7, 9])
}
