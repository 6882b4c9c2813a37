use num_rational::BigRational;
use serde::Serialize;

use crate::exact::{rational_to_decimal, sqrt_to_decimal, SignedSqrtRational};
use crate::prob::PmfTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Zero,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalRepr {
    fn from(r: &BigRational) -> Self {
        RationalRepr { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Exact {
    Root { sign: i8, radicand: RationalRepr },
    Rational { rational: RationalRepr },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BackendResult {
    pub backend: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// One result line of the command-line interface.
///
/// The decimal field is always rendered from the exact field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<PmfTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backends: Option<Vec<BackendResult>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl OutputRecord {
    fn bare(command: &str, status: Status, detail: impl Into<String>) -> Self {
        OutputRecord {
            command: command.to_string(),
            status,
            exact: None,
            decimal: None,
            detail: detail.into(),
            table: None,
            backends: None,
            agreement: None,
        }
    }

    pub fn error(command: &str, detail: impl Into<String>) -> Self {
        Self::bare(command, Status::Error, detail)
    }

    pub fn root(command: &str, value: &SignedSqrtRational, digits: u32, detail: impl Into<String>) -> Self {
        let status = if value.is_zero() { Status::Zero } else { Status::Ok };
        OutputRecord {
            exact: Some(root_exact(value)),
            decimal: Some(sqrt_to_decimal(value, digits)),
            ..Self::bare(command, status, detail)
        }
    }

    pub fn rational(command: &str, value: &BigRational, digits: u32, detail: impl Into<String>) -> Self {
        let status = if value.numer().sign() == num_bigint::Sign::NoSign { Status::Zero } else { Status::Ok };
        OutputRecord {
            exact: Some(Exact::Rational { rational: value.into() }),
            decimal: Some(rational_to_decimal(value, digits)),
            ..Self::bare(command, status, detail)
        }
    }

    /// A numeric (non-exact) result carrying only its decimal rendering.
    pub fn approximate(command: &str, value: &BigRational, digits: u32, detail: impl Into<String>) -> Self {
        OutputRecord { decimal: Some(rational_to_decimal(value, digits)), ..Self::bare(command, Status::Ok, detail) }
    }

    pub fn table(command: &str, table: PmfTable, agreement: bool, detail: impl Into<String>) -> Self {
        OutputRecord { table: Some(table), agreement: Some(agreement), ..Self::bare(command, Status::Ok, detail) }
    }

    pub fn is_error(&self) -> bool {
        self.status == Status::Error
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n  status: {}\n", self.command, status_name(self.status));
        if let Some(exact) = &self.exact {
            out += &format!("  exact: {}\n", exact_text(exact));
        }
        if let Some(d) = &self.decimal {
            out += &format!("  decimal: {d}\n");
        }
        if let Some(table) = &self.table {
            for (x, p) in table.entries() {
                out += &format!("  {x}: {p}\n");
            }
        }
        for b in self.backends.iter().flatten() {
            let value = b.exact.as_ref().map(exact_text).unwrap_or_else(|| "-".into());
            out += &format!("  [{}] {} {}\n", b.backend, status_name(b.status), value);
            if let Some(detail) = &b.detail {
                out += &format!("    {detail}\n");
            }
        }
        if let Some(a) = self.agreement {
            out += &format!("  agreement: {a}\n");
        }
        if !self.detail.is_empty() {
            out += &format!("  detail: {}\n", self.detail);
        }
        out
    }
}

pub fn root_exact(value: &SignedSqrtRational) -> Exact {
    Exact::Root { sign: value.sign(), radicand: value.radicand().into() }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Zero => "zero",
        Status::Error => "error",
    }
}

fn exact_text(e: &Exact) -> String {
    match e {
        Exact::Root { sign: 0, .. } => "0".into(),
        Exact::Root { sign, radicand } => {
            format!("{}sqrt({}/{})", if *sign < 0 { "-" } else { "+" }, radicand.num, radicand.den)
        }
        Exact::Rational { rational } => format!("{}/{}", rational.num, rational.den),
    }
}
