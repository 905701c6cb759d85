//! JSON documents. Every top-level document carries `"schema": 1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::analysis::{Analysis, Construction};
use crate::bounds::BoundsReport;
use crate::error::{Error, Result};
use crate::hochster::PdResult;
use crate::monomial::{Ideal, Monomial};
use crate::primes::{NuProfile, PrimeDecomposition};
use crate::sv::{verify_partition, Method, SvPartition};

pub const SCHEMA: u32 = 1;

fn schema_v1() -> u32 {
    SCHEMA
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    #[serde(default = "schema_v1")]
    pub schema: u32,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    #[serde(default = "schema_v1")]
    pub schema: u32,
    pub n: usize,
    pub target: Vec<String>,
    pub parts: Vec<Vec<String>>,
    /// Only exponents other than 1 are listed.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub exponents: BTreeMap<String, u32>,
    #[serde(default = "manual")]
    pub method: Method,
}

fn manual() -> Method {
    Method::Manual
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimesJson {
    pub r: usize,
    pub h: usize,
    pub tau: usize,
    pub pure: bool,
    pub primes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub method: Method,
    pub count: usize,
    pub optimal: bool,
    pub verified: bool,
    pub polynomials: Vec<String>,
    pub partition: PartitionJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisJson {
    pub schema: u32,
    pub ideal: IdealJson,
    pub mu: usize,
    pub primes: PrimesJson,
    pub nu_profile: NuProfile,
    pub bounds: BoundsReport,
    pub certificates: Vec<CertificateJson>,
    pub pd: Option<PdResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub schema: u32,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    pub parts: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub polynomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdJson {
    pub schema: u32,
    pub ideal: IdealJson,
    #[serde(flatten)]
    pub result: PdResult,
}

fn strings(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(ToString::to_string).collect()
}

fn parse_all(n: usize, texts: &[String]) -> Result<Vec<Monomial>> {
    texts.iter().map(|t| Monomial::parse(t, n)).collect()
}

impl IdealJson {
    pub fn new(ideal: &Ideal, name: Option<&str>) -> Self {
        IdealJson {
            schema: SCHEMA,
            n: ideal.n(),
            name: name.map(str::to_string),
            generators: strings(ideal.gens()),
        }
    }

    pub fn monomials(&self) -> Result<Vec<Monomial>> {
        if self.n == 0 || self.n > crate::monomial::MAX_VARS {
            return Err(Error::TooLarge { what: "variable count", size: self.n, limit: crate::monomial::MAX_VARS });
        }
        parse_all(self.n, &self.generators)
    }

    /// Accepts a bare ideal object or any document with an `ideal` field.
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
        let inner = match value.get("ideal") {
            Some(v) => v.clone(),
            None => value,
        };
        serde_json::from_value(inner).map_err(|e| Error::Parse { line: 1, column: 1, message: e.to_string() })
    }
}

impl PartitionJson {
    pub fn new(partition: &SvPartition) -> Self {
        let exponents = partition
            .exponents()
            .iter()
            .filter(|(_, &e)| e != 1)
            .map(|(m, &e)| (m.to_string(), e))
            .collect();
        PartitionJson {
            schema: SCHEMA,
            n: partition.target().n(),
            target: strings(partition.target().gens()),
            parts: partition.parts().iter().map(|p| strings(p)).collect(),
            exponents,
            method: partition.origin(),
        }
    }

    pub fn to_partition(&self) -> Result<SvPartition> {
        let target = Ideal::minimal_generators(parse_all(self.n, &self.target)?)?;
        let parts = self.parts.iter().map(|p| parse_all(self.n, p)).collect::<Result<Vec<_>>>()?;
        let mut partition = SvPartition::new(parts, target)?.with_origin(self.method);
        if !self.exponents.is_empty() {
            let mut exponents: BTreeMap<Monomial, u32> = partition.monomials().map(|m| (m.clone(), 1)).collect();
            for (text, &e) in &self.exponents {
                exponents.insert(Monomial::parse(text, self.n)?, e);
            }
            partition = partition.with_exponents(exponents)?;
        }
        Ok(partition)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }
}

impl PrimesJson {
    pub fn new(decomposition: &PrimeDecomposition) -> Self {
        PrimesJson {
            r: decomposition.r(),
            h: decomposition.h(),
            tau: decomposition.tau(),
            pure: decomposition.pure(),
            primes: decomposition.primes().iter().map(|p| p.to_vec()).collect(),
        }
    }
}

impl CertificateJson {
    pub fn new(c: &Construction) -> Self {
        CertificateJson {
            method: c.method(),
            count: c.certificate.count(),
            optimal: c.optimal,
            verified: verify_partition(&c.partition).is_ok(),
            polynomials: c.certificate.q.iter().map(ToString::to_string).collect(),
            partition: PartitionJson::new(&c.partition),
        }
    }
}

impl AnalysisJson {
    pub fn new(a: &Analysis, name: Option<&str>) -> Self {
        AnalysisJson {
            schema: SCHEMA,
            ideal: IdealJson::new(&a.ideal, name),
            mu: a.ideal.mu(),
            primes: PrimesJson::new(&a.decomposition),
            nu_profile: a.profile.clone(),
            bounds: a.report.clone(),
            certificates: a.constructions.iter().map(CertificateJson::new).collect(),
            pd: a.pd.clone(),
            notes: a.notes.clone(),
        }
    }
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse { line: e.line().max(1), column: e.column().max(1), message: e.to_string() }
}

pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{analyze, AnalyzeOptions};
    use crate::fixtures::{example1, example2};
    use crate::sv::construct_prop1;

    #[test]
    fn ideal_round_trip() {
        for ideal in [example1(), example2()] {
            let json = to_pretty(&IdealJson::new(&ideal, Some("x")));
            let back = IdealJson::parse(&json).unwrap();
            assert_eq!(Ideal::minimal_generators(back.monomials().unwrap()).unwrap(), ideal);
        }
    }

    #[test]
    fn bare_ideal_object_without_schema() {
        let doc = IdealJson::parse(r#"{"n": 3, "generators": ["x1*x2", "x3"]}"#).unwrap();
        assert_eq!(doc.schema, 1);
        assert_eq!(doc.monomials().unwrap().len(), 2);
    }

    #[test]
    fn partition_round_trip() {
        let (partition, _) = construct_prop1(&example1(), true).unwrap();
        let partition = partition.with_uniform_exponent(2).unwrap();
        let json = to_pretty(&PartitionJson::new(&partition));
        let back = PartitionJson::parse(&json).unwrap().to_partition().unwrap();
        assert_eq!(back, partition);
    }

    #[test]
    fn analysis_round_trip() {
        let a = analyze(&example2(), &AnalyzeOptions::default());
        let doc = AnalysisJson::new(&a, None);
        let json = to_pretty(&doc);
        let back: AnalysisJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_pretty(&back), json);
        assert!(json.contains("\"schema\": 1"));
        // An analysis document is also a valid ideal input.
        assert_eq!(IdealJson::parse(&json).unwrap(), doc.ideal);
    }
}
