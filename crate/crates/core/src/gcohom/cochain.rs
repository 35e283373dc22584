use num_traits::Zero;

use super::{FiniteGroupTable, GModule, ModuleKind};
use crate::error::{Error, Result};
use crate::linalg::rational::{q, QMatrix, Q};
use crate::linalg::{IntMatrix, IntegralObstruction, SmithForm, SolveOutcome};

/// Largest coboundary system (rows × columns) built densely.
pub const MAX_SYSTEM_ENTRIES: usize = 6_000_000;

/// A normalized `n`-cochain: values on `n`-tuples of non-identity elements,
/// stored densely in lexicographic order of the tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub rank: usize,
    pub values: Vec<i64>,
}

pub(crate) fn tuple_count(group: &FiniteGroupTable, n: usize) -> usize {
    (group.order() - 1).pow(n as u32)
}

/// Index of a tuple of group elements, `None` if it contains the identity.
pub(crate) fn tuple_index(group: &FiniteGroupTable, tuple: &[usize]) -> Option<usize> {
    let base = group.order() - 1;
    tuple.iter().try_fold(0usize, |acc, &g| group.nonid_pos(g).map(|p| acc * base + p))
}

pub(crate) fn tuple_at(group: &FiniteGroupTable, n: usize, mut index: usize) -> Vec<usize> {
    let base = group.order() - 1;
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = group.nonid()[index % base];
        index /= base;
    }
    out
}

impl Cochain {
    pub fn zero(group: &FiniteGroupTable, degree: usize, rank: usize) -> Self {
        Cochain { degree, rank, values: vec![0; tuple_count(group, degree) * rank] }
    }

    /// Builds a cochain from a function of tuples of group elements.
    pub fn from_fn(
        group: &FiniteGroupTable,
        degree: usize,
        rank: usize,
        mut f: impl FnMut(&[usize]) -> Result<Vec<i64>>,
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(tuple_count(group, degree) * rank);
        for t in 0..tuple_count(group, degree) {
            let v = f(&tuple_at(group, degree, t))?;
            if v.len() != rank {
                return Err(Error::ModuleMismatch("cochain value of wrong rank".into()));
            }
            values.extend(v);
        }
        Ok(Cochain { degree, rank, values })
    }

    /// Value on a tuple; zero on tuples containing the identity.
    pub fn value(&self, group: &FiniteGroupTable, tuple: &[usize]) -> Vec<i64> {
        match tuple_index(group, tuple) {
            Some(t) => self.values[t * self.rank..(t + 1) * self.rank].to_vec(),
            None => vec![0; self.rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn scale(&self, k: i64) -> Cochain {
        Cochain { values: self.values.iter().map(|v| v * k).collect(), ..self.clone() }
    }

    fn check(&self, group: &FiniteGroupTable, module: &GModule) -> Result<()> {
        if self.rank != module.rank
            || module.action.len() != group.order()
            || self.values.len() != tuple_count(group, self.degree) * self.rank
        {
            return Err(Error::ModuleMismatch(format!(
                "{}-cochain of rank {} against a module of rank {}",
                self.degree, self.rank, module.rank
            )));
        }
        Ok(())
    }
}

/// The normalized bar differential `C^n → C^{n+1}` as an integer matrix.
pub fn coboundary_matrix(group: &FiniteGroupTable, module: &GModule, n: usize) -> Result<IntMatrix> {
    let r = module.rank;
    let rows = tuple_count(group, n + 1) * r;
    let cols = tuple_count(group, n) * r;
    if rows.saturating_mul(cols) > MAX_SYSTEM_ENTRIES {
        return Err(Error::Budget(format!("coboundary system {rows}×{cols} exceeds {MAX_SYSTEM_ENTRIES} entries")));
    }
    let mut d = IntMatrix::zeros(rows, cols);
    let add = |d: &mut IntMatrix, row_t: usize, col: Option<usize>, sign: i64| {
        if let Some(col_t) = col {
            for k in 0..r {
                let (i, j) = (row_t * r + k, col_t * r + k);
                d.set(i, j, d.get(i, j) + sign);
            }
        }
    };
    for t in 0..tuple_count(group, n + 1) {
        let g = tuple_at(group, n + 1, t);
        // g1 · c(g2, ..., g_{n+1})
        if let Some(col_t) = tuple_index(group, &g[1..]) {
            let a = module.action(g[0]);
            for k in 0..r {
                for l in 0..r {
                    let (i, j) = (t * r + k, col_t * r + l);
                    d.set(i, j, d.get(i, j) + a.get(k, l));
                }
            }
        }
        for i in 0..n {
            let mut merged: Vec<usize> = g[..i].to_vec();
            merged.push(group.mul(g[i], g[i + 1]));
            merged.extend_from_slice(&g[i + 2..]);
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            add(&mut d, t, tuple_index(group, &merged), sign);
        }
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        add(&mut d, t, tuple_index(group, &g[..n]), sign);
    }
    Ok(d)
}

/// `dc`, computed directly (values reduced for torsion modules).
pub fn coboundary(group: &FiniteGroupTable, module: &GModule, c: &Cochain) -> Result<Cochain> {
    c.check(group, module)?;
    let n = c.degree;
    Cochain::from_fn(group, n + 1, c.rank, |g| {
        let mut acc = module.action(g[0]).mul_vec(&c.value(group, &g[1..]));
        for i in 0..n {
            let mut merged: Vec<usize> = g[..i].to_vec();
            merged.push(group.mul(g[i], g[i + 1]));
            merged.extend_from_slice(&g[i + 2..]);
            let v = c.value(group, &merged);
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            acc.iter_mut().zip(&v).for_each(|(a, b)| *a += sign * b);
        }
        let v = c.value(group, &g[..n]);
        let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
        acc.iter_mut().zip(&v).for_each(|(a, b)| *a += sign * b);
        Ok(acc.into_iter().map(|x| module.reduce(x)).collect())
    })
}

/// Returns the first tuple where `dc` is nonzero, as an error.
pub fn ensure_cocycle(group: &FiniteGroupTable, module: &GModule, c: &Cochain) -> Result<()> {
    let dc = coboundary(group, module, c)?;
    match dc.values.chunks(c.rank.max(1)).position(|v| v.iter().any(|&x| x != 0)) {
        Some(t) if c.rank > 0 => Err(Error::NotCocycle { tuple: tuple_at(group, c.degree + 1, t) }),
        _ => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Integral(Cochain),
    Rational { degree: usize, values: Vec<Q> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    Integral(IntegralObstruction),
    /// A functional vanishing on all coboundaries but not on the cocycle.
    Rational(Vec<Q>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoboundaryDecision {
    Coboundary(Witness),
    NotCoboundary(Certificate),
}

impl CoboundaryDecision {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, CoboundaryDecision::Coboundary(_))
    }
}

/// Decides whether a cocycle is a coboundary, with a witness `φ` (`dφ = c`)
/// or a certificate of unsolvability.
pub fn is_coboundary(group: &FiniteGroupTable, module: &GModule, c: &Cochain) -> Result<CoboundaryDecision> {
    ensure_cocycle(group, module, c)?;
    if c.degree == 0 {
        return Ok(if c.is_zero() {
            CoboundaryDecision::Coboundary(Witness::Integral(Cochain { degree: 0, rank: c.rank, values: vec![] }))
        } else {
            CoboundaryDecision::NotCoboundary(Certificate::Integral(IntegralObstruction {
                index: 0,
                elementary_divisor: 0,
                modulus: 0,
                functional: c.values.iter().position(|&v| v != 0).map(|k| vec![(k, 1)]).unwrap_or_default(),
                residue: 1,
            }))
        });
    }
    let d = coboundary_matrix(group, module, c.degree - 1)?;
    let b: Vec<i64> = c.values.iter().map(|&v| module.reduce(v)).collect();
    match module.kind {
        ModuleKind::Lattice | ModuleKind::Torsion(_) => {
            let snf = SmithForm::compute(&d)?;
            let outcome = match module.kind {
                ModuleKind::Torsion(m) => snf.solve_mod(&b, m as i128)?,
                _ => snf.solve(&b)?,
            };
            match outcome {
                SolveOutcome::Solution(x) => {
                    let values = x
                        .into_iter()
                        .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("coboundary witness")))
                        .collect::<Result<Vec<_>>>()?;
                    let phi = Cochain { degree: c.degree - 1, rank: c.rank, values };
                    let check: Vec<i64> = coboundary(group, module, &phi)?.values;
                    if check != b {
                        return Err(Error::Internal("coboundary witness failed verification".into()));
                    }
                    Ok(CoboundaryDecision::Coboundary(Witness::Integral(phi)))
                }
                SolveOutcome::Obstructed(ob) => {
                    if !ob.verify(&d, &b) {
                        return Err(Error::Internal("obstruction certificate failed verification".into()));
                    }
                    Ok(CoboundaryDecision::NotCoboundary(Certificate::Integral(ob)))
                }
            }
        }
        ModuleKind::Rational => {
            let dq = QMatrix::from_int(&d);
            let bq: Vec<Q> = b.iter().map(|&v| q(v)).collect();
            match dq.solve(&bq) {
                Some(x) => {
                    debug_assert_eq!(dq.mul_vec(&x), bq);
                    Ok(CoboundaryDecision::Coboundary(Witness::Rational { degree: c.degree - 1, values: x }))
                }
                None => {
                    let y = dq.inconsistency_witness(&bq).ok_or_else(|| Error::Internal("missing witness".into()))?;
                    debug_assert!(!y.iter().zip(&bq).fold(Q::zero(), |acc, (u, v)| acc + u * v).is_zero());
                    Ok(CoboundaryDecision::NotCoboundary(Certificate::Rational(y)))
                }
            }
        }
    }
}

/// Restriction to a subgroup given by its table and embedding.
pub fn restrict(
    group: &FiniteGroupTable,
    c: &Cochain,
    sub: &FiniteGroupTable,
    embedding: &[usize],
) -> Result<Cochain> {
    if embedding.len() != sub.order() || embedding[sub.identity()] != group.identity() {
        return Err(Error::NotClosed);
    }
    for a in 0..sub.order() {
        for b in 0..sub.order() {
            if embedding[sub.mul(a, b)] != group.mul(embedding[a], embedding[b]) {
                return Err(Error::NotClosed);
            }
        }
    }
    Cochain::from_fn(sub, c.degree, c.rank, |t| {
        let image: Vec<usize> = t.iter().map(|&g| embedding[g]).collect();
        Ok(c.value(group, &image))
    })
}
