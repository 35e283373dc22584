use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::rational::{q, QMatrix, Q};

/// The classical families with built-in constructors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    GL,
    SL,
    PGL,
    Sp,
    SO,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Family::GL),
            "SL" => Ok(Family::SL),
            "PGL" => Ok(Family::PGL),
            "SP" => Ok(Family::Sp),
            "SO" => Ok(Family::SO),
            _ => Err(Error::UnsupportedFamily { family: s.to_string(), n: 0 }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::GL => "GL",
            Family::SL => "SL",
            Family::PGL => "PGL",
            Family::Sp => "Sp",
            Family::SO => "SO",
        };
        f.write_str(s)
    }
}

/// Constructor label. `n` is the size of the defining matrices, so `Sp(4)`
/// and `SO(5)` both have rank two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeTag {
    pub family: Family,
    pub n: usize,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

impl FromStr for TypeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDatum(format!("cannot parse type tag {s:?}"));
        let (fam, rest) = s.split_once('(').ok_or_else(bad)?;
        let n = rest.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        Ok(TypeTag { family: fam.trim().parse()?, n })
    }
}

impl Serialize for TypeTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TypeTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root datum given by simple roots and coroots.
///
/// `rank` is the rank of the (co)character lattice; the number of simple
/// roots is the semisimple rank and may be smaller (e.g. for `GL(n)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    type_tag: Option<TypeTag>,
}

#[derive(Deserialize)]
struct RawDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    #[serde(default)]
    type_tag: Option<TypeTag>,
}

impl TryFrom<RawDatum> for RootDatum {
    type Error = Error;

    fn try_from(raw: RawDatum) -> Result<Self> {
        RootDatum::new(raw.rank, raw.simple_roots, raw.simple_coroots, raw.type_tag)
    }
}

impl RootDatum {
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
        type_tag: Option<TypeTag>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidDatum("lattice rank must be positive".into()));
        }
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::InvalidDatum("root and coroot counts differ".into()));
        }
        if simple_roots.len() > rank {
            return Err(Error::InvalidDatum("more simple roots than the lattice rank".into()));
        }
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(Error::InvalidDatum(format!("every vector must have {rank} coordinates")));
        }
        let datum = Self { rank, simple_roots, simple_coroots, type_tag };
        datum.validate_cartan()?;
        Ok(datum)
    }

    fn validate_cartan(&self) -> Result<()> {
        let a = self.cartan_matrix();
        let s = a.len();
        for i in 0..s {
            if a[i][i] != 2 {
                return Err(Error::InvalidDatum(format!("<alpha_{i}, coroot_{i}> = {} != 2", a[i][i])));
            }
            for j in 0..s {
                if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                    return Err(Error::InvalidDatum(format!("bad off-diagonal Cartan entry at ({i},{j})")));
                }
            }
        }
        // Symmetrize with d_i a_ij = d_j a_ji, then require positive definiteness.
        let mut d: Vec<Option<Q>> = vec![None; s];
        for start in 0..s {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(q(1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..s {
                    if i == j || a[i][j] == 0 {
                        continue;
                    }
                    let di = d[i].clone().expect("visited");
                    let dj = di * q(a[i][j]) / q(a[j][i]);
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(existing) if *existing != dj => {
                            return Err(Error::InvalidDatum("Cartan matrix is not symmetrizable".into()));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let sym = QMatrix::from_rows(
            (0..s)
                .map(|i| (0..s).map(|j| d[i].clone().expect("all visited") * q(a[i][j])).collect())
                .collect(),
        );
        if s > 0 && !sym.leading_minors_positive() {
            return Err(Error::InvalidDatum("Cartan matrix is not of finite type".into()));
        }
        if s > 0 && sym.determinant().is_zero() {
            return Err(Error::InvalidDatum("Cartan matrix is singular".into()));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn type_tag(&self) -> Option<TypeTag> {
        self.type_tag
    }

    pub fn label(&self) -> String {
        self.type_tag.map_or_else(|| "custom".to_string(), |t| t.to_string())
    }

    /// `a[i][j] = <alpha_i, coroot_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|r| self.simple_coroots.iter().map(|c| super::dot(r, c)).collect())
            .collect()
    }
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

fn diff(rank: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = unit(rank, i);
    v[j] -= 1;
    v
}

fn type_a_cartan(s: usize) -> Vec<Vec<i64>> {
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Standard root datum of a classical group. `n` is the matrix size:
/// `GL(n)`, `SL(n)`, `PGL(n)`, `Sp(n)` with `n` even, `SO(n)` with `n ≥ 3`.
pub fn build_classical(family: Family, n: usize) -> Result<RootDatum> {
    let unsupported = || Error::UnsupportedFamily { family: family.to_string(), n };
    let tag = Some(TypeTag { family, n });
    match family {
        Family::GL => {
            if n < 1 {
                return Err(unsupported());
            }
            let roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            RootDatum::new(n, roots.clone(), roots, tag)
        }
        Family::SL => {
            if n < 2 {
                return Err(unsupported());
            }
            let a = type_a_cartan(n - 1);
            let coroots = (0..n - 1).map(|i| unit(n - 1, i)).collect();
            RootDatum::new(n - 1, a, coroots, tag)
        }
        Family::PGL => {
            if n < 2 {
                return Err(unsupported());
            }
            let a = type_a_cartan(n - 1);
            let roots = (0..n - 1).map(|i| unit(n - 1, i)).collect();
            let coroots = (0..n - 1).map(|i| (0..n - 1).map(|j| a[j][i]).collect()).collect();
            RootDatum::new(n - 1, roots, coroots, tag)
        }
        Family::Sp => {
            if n < 2 || n % 2 != 0 {
                return Err(unsupported());
            }
            let k = n / 2;
            let mut roots: Vec<Vec<i64>> = (0..k - 1).map(|i| diff(k, i, i + 1)).collect();
            let mut coroots = roots.clone();
            roots.push(unit(k, k - 1).iter().map(|v| 2 * v).collect());
            coroots.push(unit(k, k - 1));
            RootDatum::new(k, roots, coroots, tag)
        }
        Family::SO => {
            if n < 3 {
                return Err(unsupported());
            }
            let k = n / 2;
            let mut roots: Vec<Vec<i64>> = (0..k - 1).map(|i| diff(k, i, i + 1)).collect();
            let mut coroots = roots.clone();
            if n % 2 == 1 {
                roots.push(unit(k, k - 1));
                coroots.push(unit(k, k - 1).iter().map(|v| 2 * v).collect());
            } else {
                let mut v = unit(k, k - 2);
                v[k - 1] = 1;
                roots.push(v.clone());
                coroots.push(v);
            }
            RootDatum::new(k, roots, coroots, tag)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_normalizations() {
        let sl2 = build_classical(Family::SL, 2).unwrap();
        assert_eq!(sl2.simple_roots(), &[vec![2]]);
        assert_eq!(sl2.simple_coroots(), &[vec![1]]);
        let pgl2 = build_classical(Family::PGL, 2).unwrap();
        assert_eq!(pgl2.simple_roots(), &[vec![1]]);
        assert_eq!(pgl2.simple_coroots(), &[vec![2]]);
    }

    #[test]
    fn so5_short_coroot() {
        let so5 = build_classical(Family::SO, 5).unwrap();
        assert_eq!(so5.simple_coroots()[1], vec![0, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(build_classical(Family::Sp, 3).is_err());
        assert!(build_classical(Family::SO, 2).is_err());
        assert!(build_classical(Family::SL, 1).is_err());
        // Affine A1: <alpha_i, coroot_j> = [[2,-2],[-2,2]].
        let affine = RootDatum::new(2, vec![vec![2, -2], vec![-2, 2]], vec![vec![1, 0], vec![0, 1]], None);
        assert!(matches!(affine, Err(Error::InvalidDatum(_))));
    }

    #[test]
    fn json_shape() {
        let d = build_classical(Family::SO, 5).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["type_tag"], "SO(5)");
        assert_eq!(v["rank"], 2);
        let back: RootDatum = serde_json::from_value(v).unwrap();
        assert_eq!(back, d);
        let bad = serde_json::json!({"rank": 1, "simple_roots": [[3]], "simple_coroots": [[1]]});
        assert!(serde_json::from_value::<RootDatum>(bad).is_err());
    }
}
