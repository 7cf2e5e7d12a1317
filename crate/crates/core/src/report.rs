//! Serializable summary of the apolar data of one form.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::apolar::{hilbert_sequence, minimal_generator_profile, verify_generator_set, ProfileMethod, VerificationReport};
use crate::error::Result;
use crate::invariants::{build_generator_set, Form, GeneratorKind};
use crate::pairing::Pairing;
use crate::ring::{Layout, RingSpec};

#[derive(Debug, Clone, Serialize)]
pub struct FormReport {
    pub n: usize,
    pub form: String,
    pub layout: Layout,
    pub pairing: Pairing,
    pub hilbert: Vec<usize>,
    pub length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_profile: Option<BTreeMap<String, usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle_generators: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    /// Compute generator counts up to this degree.
    pub profile_up_to: Option<u32>,
    /// Verify this generator set against the form.
    pub verify: Option<GeneratorKind>,
    /// Highest degree checked by the verification.
    pub verify_max_degree: Option<u32>,
}

pub fn form_report(form: &Form, n: usize, layout: Layout, pairing: Pairing, opts: &ReportOptions) -> Result<FormReport> {
    let ring = RingSpec::new(n, layout, crate::ring::Flavor::Usual)?;
    let f = form.poly(&ring)?;
    let h = hilbert_sequence(&f, pairing)?;
    let (generator_profile, socle_generators) = match opts.profile_up_to {
        Some(k) => {
            let p = minimal_generator_profile(&f, pairing, k, ProfileMethod::Dual)?;
            let counts = p.counts.iter().map(|(d, c)| (d.to_string(), *c)).collect();
            let socle = if k > h.values.len() as u32 - 1 { Some(p.socle) } else { None };
            (Some(counts), socle)
        }
        None => (None, None),
    };
    let verification = match opts.verify {
        Some(kind) => {
            let gens = build_generator_set(kind, n)?;
            Some(verify_generator_set(&f, &gens.members, pairing, opts.verify_max_degree)?)
        }
        None => None,
    };
    Ok(FormReport {
        n,
        form: form.kind_name().into(),
        layout,
        pairing,
        length: h.length,
        hilbert: h.values,
        generator_profile,
        socle_generators,
        verification,
    })
}
