//! R-matrix models: local matrices for real and virtual crossings, the
//! trace weight `η` and the normalization constant `α`.

use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::poly::LaurentPoly;
use crate::braid::BraidCategory;
use crate::error::{Error, Result};

/// Optional quadratic check: `(sR)² = (q − 1)(sR) + q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeSpec {
    pub q: LaurentPoly,
    pub scale: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrixModel {
    pub name: String,
    pub d: usize,
    pub eta: Matrix,
    pub r: Matrix,
    pub rinv: Matrix,
    pub v: Matrix,
    pub alpha: LaurentPoly,
    pub hecke: Option<HeckeSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelCheck {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub model: String,
    pub checks: Vec<ModelCheck>,
}

impl ModelReport {
    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    /// The checks every model must pass to give virtual braid invariants.
    pub fn core_passed(&self) -> bool {
        CORE_CHECKS.iter().all(|n| self.get(n) == Some(true))
    }

    pub fn certifies(&self, category: BraidCategory) -> bool {
        match category {
            BraidCategory::Virtual => self.core_passed(),
            BraidCategory::Welded => self.core_passed() && self.get("F1") == Some(true),
            BraidCategory::Unrestricted => {
                self.core_passed() && self.get("F1") == Some(true) && self.get("F2") == Some(true)
            }
            BraidCategory::Flat => false,
        }
    }
}

pub const CORE_CHECKS: [&str; 6] = [
    "R*Rinv=I",
    "Rinv*R=I",
    "YBE(R)",
    "YBE(V)",
    "V*V=I",
    "mixed-detour",
];

#[derive(Serialize, Deserialize)]
struct ModelFile {
    #[serde(default = "default_format")]
    format: String,
    #[serde(default)]
    name: Option<String>,
    d: usize,
    eta: Vec<Vec<String>>,
    #[serde(rename = "R")]
    r: Vec<Vec<String>>,
    #[serde(rename = "Rinv")]
    rinv: Vec<Vec<String>>,
    #[serde(rename = "V")]
    v: Vec<Vec<String>>,
    alpha: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hecke: Option<HeckeFile>,
}

#[derive(Serialize, Deserialize)]
struct HeckeFile {
    q: String,
    #[serde(default = "one_string")]
    scale: String,
}

fn default_format() -> String {
    crate::diagram::FORMAT.to_string()
}

fn one_string() -> String {
    "1".to_string()
}

fn parse_matrix(rows: &[Vec<String>], dim: usize, what: &str) -> Result<Matrix> {
    let parsed: Vec<Vec<LaurentPoly>> = rows
        .iter()
        .map(|r| r.iter().map(|s| LaurentPoly::parse(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()
        .map_err(|e| Error::InvalidModel(format!("{what}: {e}")))?;
    let m = Matrix::from_rows(parsed)
        .ok_or_else(|| Error::InvalidModel(format!("{what} is not square")))?;
    if m.dim() != dim {
        return Err(Error::InvalidModel(format!(
            "{what} has dimension {}, expected {dim}",
            m.dim()
        )));
    }
    Ok(m)
}

fn show_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn swap_matrix(d: usize) -> Matrix {
    let images: Vec<usize> = (0..d * d).map(|k| (k % d) * d + k / d).collect();
    Matrix::permutation(&images)
}

fn a(c: i64, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(c, e)
}

impl RMatrixModel {
    pub fn new(
        name: &str,
        d: usize,
        eta: Matrix,
        r: Matrix,
        rinv: Matrix,
        v: Matrix,
        alpha: LaurentPoly,
    ) -> Result<Self> {
        let m = RMatrixModel {
            name: name.to_string(),
            d,
            eta,
            r,
            rinv,
            v,
            alpha,
            hecke: None,
        };
        m.validate_shape()?;
        Ok(m)
    }

    fn validate_shape(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidModel("local dimension must be positive".into()));
        }
        if self.eta.dim() != self.d {
            return Err(Error::InvalidModel("eta must be d x d".into()));
        }
        for (m, n) in [(&self.r, "R"), (&self.rinv, "Rinv"), (&self.v, "V")] {
            if m.dim() != self.d * self.d {
                return Err(Error::InvalidModel(format!("{n} must be d^2 x d^2")));
            }
        }
        if !self.alpha.is_unit() {
            return Err(Error::InvalidModel(format!(
                "alpha = {} is not invertible",
                self.alpha
            )));
        }
        Ok(())
    }

    /// Temperley-Lieb solution in the variable `A`: `R = A·I + A⁻¹·U`,
    /// `η = diag(−A², −A⁻²)`, `V` the swap, `α = −A³`.
    pub fn bracket() -> Self {
        let mut u = Matrix::zero(4);
        u.set(1, 1, a(-1, 2));
        u.set(1, 2, a(1, 0));
        u.set(2, 1, a(1, 0));
        u.set(2, 2, a(-1, -2));
        let i4 = Matrix::identity(4);
        let r = i4.scale(&a(1, 1)).add(&u.scale(&a(1, -1)));
        let rinv = i4.scale(&a(1, -1)).add(&u.scale(&a(1, 1)));
        let mut eta = Matrix::zero(2);
        eta.set(0, 0, a(-1, 2));
        eta.set(1, 1, a(-1, -2));
        let mut m = RMatrixModel::new("bracket", 2, eta, r, rinv, swap_matrix(2), a(-1, 3))
            .expect("bracket model is well formed");
        m.hecke = Some(HeckeSpec {
            q: a(1, 4),
            scale: a(1, 3),
        });
        m
    }

    /// `R = R⁻¹ = V =` swap, `η = I`, `α = 1`.
    pub fn swap(d: usize) -> Self {
        let s = swap_matrix(d);
        let mut m = RMatrixModel::new("swap", d, Matrix::identity(d), s.clone(), s.clone(), s, a(1, 0))
            .expect("swap model is well formed");
        m.hecke = Some(HeckeSpec {
            q: a(1, 0),
            scale: a(1, 0),
        });
        m
    }

    /// Every matrix the identity, `α = 1`.
    pub fn identity(d: usize) -> Self {
        let i = Matrix::identity(d * d);
        RMatrixModel::new("identity", d, Matrix::identity(d), i.clone(), i.clone(), i, a(1, 0))
            .expect("identity model is well formed")
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "bracket" => Some(Self::bracket()),
            "swap" => Some(Self::swap(2)),
            "identity" => Some(Self::identity(2)),
            _ => None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: ModelFile = serde_json::from_str(text)?;
        if f.format != crate::diagram::FORMAT {
            return Err(Error::InvalidModel(format!("unknown format {:?}", f.format)));
        }
        if f.d == 0 || f.d > 16 {
            return Err(Error::InvalidModel(format!("unsupported local dimension {}", f.d)));
        }
        let dd = f.d * f.d;
        let mut m = RMatrixModel {
            name: f.name.unwrap_or_else(|| "custom".into()),
            d: f.d,
            eta: parse_matrix(&f.eta, f.d, "eta")?,
            r: parse_matrix(&f.r, dd, "R")?,
            rinv: parse_matrix(&f.rinv, dd, "Rinv")?,
            v: parse_matrix(&f.v, dd, "V")?,
            alpha: LaurentPoly::parse(&f.alpha)
                .map_err(|e| Error::InvalidModel(format!("alpha: {e}")))?,
            hecke: None,
        };
        if let Some(h) = f.hecke {
            let parse = |s: &str| {
                LaurentPoly::parse(s).map_err(|e| Error::InvalidModel(format!("hecke: {e}")))
            };
            m.hecke = Some(HeckeSpec {
                q: parse(&h.q)?,
                scale: parse(&h.scale)?,
            });
        }
        let vars: std::collections::BTreeSet<char> = [&m.eta, &m.r, &m.rinv, &m.v]
            .iter()
            .flat_map(|x| x.rows().into_iter().flatten())
            .chain(std::iter::once(m.alpha.clone()))
            .filter(|p| !p.is_constant())
            .map(|p| p.var())
            .collect();
        if vars.len() > 1 {
            return Err(Error::InvalidModel(format!("entries mix variables {vars:?}")));
        }
        m.validate_shape()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        let f = ModelFile {
            format: default_format(),
            name: Some(self.name.clone()),
            d: self.d,
            eta: show_matrix(&self.eta),
            r: show_matrix(&self.r),
            rinv: show_matrix(&self.rinv),
            v: show_matrix(&self.v),
            alpha: self.alpha.to_string(),
            hecke: self.hecke.as_ref().map(|h| HeckeFile {
                q: h.q.to_string(),
                scale: h.scale.to_string(),
            }),
        };
        serde_json::to_string_pretty(&f).expect("model serializes")
    }

    fn id(&self) -> Matrix {
        Matrix::identity(self.d)
    }

    /// `M ⊗ I` and `I ⊗ M` for a two-factor matrix, on three factors.
    fn on_three(&self, m: &Matrix) -> (Matrix, Matrix) {
        (m.kron(&self.id()), self.id().kron(m))
    }

    /// Exact verification of the defining identities.
    pub fn check(&self) -> ModelReport {
        let mut checks = Vec::new();
        let mut push = |name: &str, lhs: Matrix, rhs: Matrix| {
            let diff = lhs.first_difference(&rhs);
            checks.push(ModelCheck {
                name: name.to_string(),
                passed: diff.is_none(),
                detail: diff.map(|(r, c)| {
                    format!("entry ({r}, {c}): {} vs {}", lhs.get(r, c), rhs.get(r, c))
                }),
            });
        };
        let dd = Matrix::identity(self.d * self.d);
        push("R*Rinv=I", &self.r * &self.rinv, dd.clone());
        push("Rinv*R=I", &self.rinv * &self.r, dd.clone());
        let (r1, r2) = self.on_three(&self.r);
        let (v1, v2) = self.on_three(&self.v);
        push("YBE(R)", &(&r1 * &r2) * &r1, &(&r2 * &r1) * &r2);
        push("YBE(V)", &(&v1 * &v2) * &v1, &(&v2 * &v1) * &v2);
        push("V*V=I", &self.v * &self.v, dd.clone());
        push("mixed-detour", &(&v1 * &r2) * &v1, &(&v2 * &r1) * &v2);
        let ee = self.eta.kron(&self.eta);
        push("eta-commutes-R", &ee * &self.r, &self.r * &ee);
        push("eta-commutes-V", &ee * &self.v, &self.v * &ee);
        push("F1", &(&v1 * &r2) * &r1, &(&r2 * &r1) * &v2);
        push("F2", &(&r1 * &r2) * &v1, &(&v2 * &r1) * &r2);
        if let Some(h) = &self.hecke {
            let sr = self.r.scale(&h.scale);
            let qm1 = &h.q - &LaurentPoly::one();
            push(
                "hecke-quadratic",
                &sr * &sr,
                sr.scale(&qm1).add(&dd.scale(&h.q)),
            );
        }
        ModelReport {
            model: self.name.clone(),
            checks,
        }
    }
}

pub fn check_model(model: &RMatrixModel) -> ModelReport {
    model.check()
}
