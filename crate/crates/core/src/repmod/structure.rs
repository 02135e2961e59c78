use serde::Serialize;

use super::{is_indecomposable_capped, Rep, DEFAULT_END_CAP};
use crate::error::{Error, Result};

/// True iff every radical layer is at most one-dimensional.
pub fn is_uniserial(m: &Rep) -> bool {
    m.radical_layers().iter().all(|&d| d <= 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub length: usize,
    pub loewy_length: usize,
    pub is_local: bool,
    pub is_colocal: bool,
    pub is_uniserial: bool,
    pub socle_length: usize,
    pub top_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// Degree `n` such that `m` is n-factor serial (1 for uniserial modules).
pub fn factor_serial_degree(m: &Rep) -> Result<DegreeReport> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let layers = m.radical_layers();
    let l = m.length();
    let t = layers.len();
    // m/rad^k m has radical layers layers[..k].
    let uni: Vec<bool> = (0..=t).map(|k| layers[..k].iter().all(|&d| d <= 1)).collect();
    let k_star = uni.iter().rposition(|&u| u).expect("m/rad^0 m = 0 is uniserial");
    assert!(uni[..=k_star].iter().all(|&u| u), "uniserial quotients must form an initial segment");
    let is_uni = k_star == t;
    let degree = if is_uni { 1 } else { l - k_star };
    let warning = if l <= DEFAULT_END_CAP {
        match is_indecomposable_capped(m, DEFAULT_END_CAP) {
            Ok(false) => Some("module is decomposable".to_string()),
            _ => None,
        }
    } else {
        None
    };
    let socle_length = m.socle_length();
    let top_length = layers[0];
    Ok(DegreeReport {
        degree,
        length: l,
        loewy_length: t,
        is_local: top_length == 1,
        is_colocal: socle_length == 1,
        is_uniserial: is_uni,
        socle_length,
        top_length,
        warning,
    })
}
