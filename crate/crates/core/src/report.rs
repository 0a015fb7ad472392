//! Machine-readable reports with a fixed key order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::systems::{
    canonical_code, coincidence_test, complement, intersection_matrix, CurveSystem, Verdict,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionSummary {
    pub euler: i64,
    pub disk: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub triple: [String; 3],
    pub rank: usize,
    pub verdict: Verdict,
}

/// Everything `verify` reports about a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub genus: usize,
    pub matrix: Vec<Vec<usize>>,
    pub k: usize,
    pub complete1: bool,
    pub size: usize,
    pub bound: usize,
    pub maximal: bool,
    pub regions: Vec<RegionSummary>,
    pub filling: bool,
    pub obstruction: Option<ObstructionReport>,
    /// Absent when the union of the curves is disconnected.
    pub canonical_code: Option<String>,
}

pub fn verify_report(sys: &CurveSystem, triple: Option<[usize; 3]>) -> Result<VerifyReport> {
    let r = intersection_matrix(sys)?;
    let (regions, filling) = complement(sys)?;
    let obstruction = match triple {
        Some(t) => {
            let sub = sys.subsystem(&t)?;
            let o = coincidence_test(&sub)?;
            Some(ObstructionReport {
                triple: t.map(|i| sys.names[i].clone()),
                rank: o.rank,
                verdict: o.verdict,
            })
        }
        None => None,
    };
    let canonical_code = match sys.union_map().and_then(|m| canonical_code(&m)) {
        Ok(code) => Some(code),
        Err(Error::DisconnectedUnion) => None,
        Err(e) => return Err(e),
    };
    Ok(VerifyReport {
        genus: r.genus,
        matrix: r.matrix,
        k: r.k,
        complete1: r.complete1,
        size: r.size,
        bound: r.bound,
        maximal: r.maximal,
        regions: regions
            .iter()
            .map(|x| RegionSummary {
                euler: x.euler,
                disk: x.disk,
            })
            .collect(),
        filling,
        obstruction,
        canonical_code,
    })
}

/// Pretty JSON in declaration order, newline-terminated.
pub fn emit_report<T: Serialize>(data: &T) -> String {
    let mut s = serde_json::to_string_pretty(data).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_xg;

    #[test]
    fn keys_come_out_in_schema_order() {
        let r = verify_report(&build_xg(2).unwrap(), Some([0, 1, 2])).unwrap();
        let text = emit_report(&r);
        assert!(text.ends_with("}\n"));
        let keys = [
            "\"genus\"",
            "\"matrix\"",
            "\"k\"",
            "\"complete1\"",
            "\"size\"",
            "\"bound\"",
            "\"maximal\"",
            "\"regions\"",
            "\"filling\"",
            "\"obstruction\"",
            "\"canonical_code\"",
        ];
        let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            (r.genus, r.size, r.bound, r.complete1, r.maximal),
            (2, 5, 5, true, true)
        );
        assert_eq!(r.obstruction.unwrap().verdict, Verdict::Inconclusive);
        assert_eq!(
            text,
            emit_report(&verify_report(&build_xg(2).unwrap(), Some([0, 1, 2])).unwrap())
        );
    }
}
