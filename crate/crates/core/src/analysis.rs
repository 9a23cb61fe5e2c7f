//! The full pipeline for one extension: ramification data, filtrations,
//! quotients, classification, conductors, depth and the bounds.

use crate::conductor::{
    artin_conductor, artin_via_compositum, depth, hyodo_bounds, kato_conductor, kato_conductor_any, spriano_bound,
    swan_conductor, Character, CompositumCheck, ConductorReport, DepthReport, HyodoLedger, SprianoLedger,
};
use crate::error::{Error, Result};
use crate::extension::{CaseLabel, GaloisExtension};
use crate::ramfilt::checks::quotients;
use crate::ramfilt::{
    classify_case, compute, filtrations, tower_decomposition, well_ramified_verdict, Filtrations, Quotients,
    RamificationData, Tower, Verdict, Q,
};

/// sw, A and ksw of one character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterRow {
    pub character: Character,
    pub sw: Q,
    pub artin: Q,
    pub ksw: Option<i64>,
}

#[derive(Debug)]
pub struct Analysis {
    pub ext: GaloisExtension,
    pub data: RamificationData,
    pub filtrations: Filtrations,
    pub quotients: Quotients,
    pub verdict: Verdict,
    pub label: CaseLabel,
    pub tower: Option<Tower>,
    /// The faithful character, for cyclic groups.
    pub chi: Option<Character>,
    pub conductor: Option<ConductorReport>,
    pub characters: Vec<CharacterRow>,
    pub depth: Option<DepthReport>,
    pub hyodo: Option<HyodoLedger>,
    pub spriano: Option<SprianoLedger>,
    pub compositum: Option<CompositumCheck>,
}

/// Errors other than precision loss, kept so that one failing side
/// computation does not hide the rest of the report.
fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_precision() => Err(e),
        Err(Error::Unsupported(_)) | Err(Error::NotCaseIII) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn analyze(ext: GaloisExtension) -> Result<Analysis> {
    let data = compute(&ext)?;
    let filtrations = filtrations(&data);
    let quotients = quotients(&ext)?;
    let verdict = well_ramified_verdict(&ext, &data, &quotients);
    let label = classify_case(&ext, &verdict)?;
    let verdict = verdict?;
    let tower = match tower_decomposition(&ext, &quotients) {
        Ok(t) => Some(t),
        Err(Error::NoDecomposition) => None,
        Err(e) => return Err(e),
    };
    let chi = optional(Character::faithful(ext.table()))?;
    let characters = match Character::all(ext.table()) {
        Ok(all) => all
            .into_iter()
            .map(|c| {
                let ksw = optional(kato_conductor_any(&data, label, &quotients, &c))?.map(|r| r.ksw);
                Ok(CharacterRow { sw: swan_conductor(&data, &c)?, artin: artin_conductor(&data, &c)?, ksw, character: c })
            })
            .collect::<Result<Vec<_>>>()?,
        Err(Error::NotAbelian) => Vec::new(),
        Err(e) => return Err(e),
    };
    let conductor = match &chi {
        Some(c) => Some(kato_conductor(&data, label, c)?),
        None => None,
    };
    let hilbert = &verdict.hilbert;
    let depth = match &conductor {
        Some(c) => Some(depth(&data, hilbert, label, c.ksw)?),
        None => None,
    };
    let hyodo = match &depth {
        Some(d) => optional(hyodo_bounds(ext.table(), &data, label, &quotients, ext.p(), d.d_k))?,
        None => None,
    };
    let spriano = match (&conductor, &depth) {
        (Some(c), Some(d)) => Some(spriano_bound(&data, c, d)),
        _ => None,
    };
    let compositum = match (&chi, &conductor) {
        (Some(chi), Some(c)) if label == CaseLabel::CaseIII => optional(artin_via_compositum(&ext, &data, chi, c.ksw))?,
        _ => None,
    };
    Ok(Analysis {
        ext,
        data,
        filtrations,
        quotients,
        verdict,
        label,
        tower,
        chi,
        conductor,
        characters,
        depth,
        hyodo,
        spriano,
        compositum,
    })
}

/// Parse, build and analyse one description.
pub fn analyze_doc(doc: &serde_json::Value, policy: crate::cdvf::PrecisionPolicy) -> Result<Analysis> {
    let d = crate::describe::parse_value(doc, policy)?;
    analyze(d.build()?)
}

/// Every catalog entry, analysed in parallel; results keep catalog order.
pub fn analyze_catalog(policy: crate::cdvf::PrecisionPolicy) -> Vec<(&'static str, Result<Analysis>)> {
    use rayon::prelude::*;
    crate::catalog::entries().into_par_iter().map(|e| (e.name, analyze_doc(&e.doc, policy))).collect()
}
