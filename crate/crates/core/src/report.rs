//! CSV and JSON serialization of [`IntegralityReport`]s.
//!
//! Every numeric field is written as an exact decimal or `num/den` string —
//! never as a native number — so the output survives consumers that would
//! coerce JSON numbers to floats.  Parsing the output reconstructs the exact
//! reports.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::integrality::IntegralityReport;
use crate::poly::PolyQ;
use crate::powersum::ProgressionParams;
use crate::rat::Rat;

#[derive(Debug, Serialize, Deserialize)]
struct CsvRecord {
    m: String,
    r: String,
    n: String,
    /// Space-separated coefficients, lowest degree first.
    coefficients: String,
    is_integral: bool,
    #[serde(rename = "F")]
    threshold: String,
    predicate: bool,
    agrees: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRecord {
    m: String,
    r: String,
    n: String,
    /// Coefficients lowest degree first.
    coefficients: Vec<String>,
    is_integral: bool,
    #[serde(rename = "F")]
    threshold: String,
    predicate: bool,
    agrees: bool,
}

impl From<&IntegralityReport> for CsvRecord {
    fn from(rep: &IntegralityReport) -> Self {
        CsvRecord {
            m: rep.params.m.to_string(),
            r: rep.params.r.to_string(),
            n: rep.params.n.to_string(),
            coefficients: rep.coeffs.coeff_list_string(),
            is_integral: rep.is_integral,
            threshold: rep.threshold.to_string(),
            predicate: rep.predicate,
            agrees: rep.agrees,
        }
    }
}

impl From<&IntegralityReport> for JsonRecord {
    fn from(rep: &IntegralityReport) -> Self {
        JsonRecord {
            m: rep.params.m.to_string(),
            r: rep.params.r.to_string(),
            n: rep.params.n.to_string(),
            coefficients: rep.coeffs.coeff_strings(),
            is_integral: rep.is_integral,
            threshold: rep.threshold.to_string(),
            predicate: rep.predicate,
            agrees: rep.agrees,
        }
    }
}

fn parse_num<T>(field: &str, s: &str) -> Result<T, Error>
where
    T: std::str::FromStr,
    T::Err: std::fmt::Display,
{
    s.trim()
        .parse()
        .map_err(|e| Error::Parse(format!("{field} {s:?}: {e}")))
}

fn parse_coeffs<'a>(parts: impl IntoIterator<Item = &'a str>) -> Result<PolyQ, Error> {
    let coeffs: Vec<Rat> = parts
        .into_iter()
        .map(|s| parse_num("coefficient", s))
        .collect::<Result<_, _>>()?;
    Ok(PolyQ::new(coeffs))
}

#[allow(clippy::too_many_arguments)]
fn rebuild(
    m: &str,
    r: &str,
    n: &str,
    coeffs: PolyQ,
    is_integral: bool,
    threshold: &str,
    predicate: bool,
    agrees: bool,
) -> Result<IntegralityReport, Error> {
    Ok(IntegralityReport {
        params: ProgressionParams::new(parse_num("m", m)?, parse_num("r", r)?, parse_num("n", n)?),
        coeffs,
        is_integral,
        threshold: parse_num("F", threshold)?,
        predicate,
        agrees,
    })
}

pub fn reports_to_csv(reports: &[IntegralityReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for rep in reports {
        w.serialize(CsvRecord::from(rep)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn reports_from_csv(text: &str) -> Result<Vec<IntegralityReport>, Error> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize()
        .map(|row| {
            let rec: CsvRecord = row.map_err(|e| Error::Parse(e.to_string()))?;
            rebuild(
                &rec.m,
                &rec.r,
                &rec.n,
                parse_coeffs(rec.coefficients.split_whitespace())?,
                rec.is_integral,
                &rec.threshold,
                rec.predicate,
                rec.agrees,
            )
        })
        .collect()
}

pub fn reports_to_json(reports: &[IntegralityReport]) -> String {
    let records: Vec<JsonRecord> = reports.iter().map(JsonRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("report serialization is infallible")
}

pub fn reports_from_json(text: &str) -> Result<Vec<IntegralityReport>, Error> {
    let records: Vec<JsonRecord> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    records
        .into_iter()
        .map(|rec| {
            rebuild(
                &rec.m,
                &rec.r,
                &rec.n,
                parse_coeffs(rec.coefficients.iter().map(String::as_str))?,
                rec.is_integral,
                &rec.threshold,
                rec.predicate,
                rec.agrees,
            )
        })
        .collect()
}
