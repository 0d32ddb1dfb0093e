use std::collections::BTreeSet;

use congruence_core::burnside::{burnside_obstruction, make_certificate, verify_certificate};
use congruence_core::cup::{
    form_from_split_presentation, forms_equivalent, lens_form, obstruct_weak_congruence, FormComparison, FormError,
    Inequivalence, SearchOptions, TrilinearFormZd,
};
use congruence_core::link::dbc_homology;
use congruence_core::zmod::{cokernel_mod, ZdMatrix, ZdModuleStructure, ZmodError, DEFAULT_BUDGET};
use congruence_core::{Evidence, VerdictStatus};
use serde_json::{json, Value};

use crate::formats::{CertificateJson, FormJson};
use crate::input::{Input, Resolved};
use crate::report::{Claim, Report, Status};
use crate::{KitError, Result, BUDGET_ENV};

/// Invariants and shortcuts that `--skip` can turn off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Skip {
    Burnside,
    CupForm,
    FastPath,
    Homology,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest `|GL(n, Z_d)|` a form search may enumerate.
    pub budget: u128,
    pub skip: BTreeSet<Skip>,
}

impl Default for Options {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, skip: BTreeSet::new() }
    }
}

impl Options {
    /// `--budget` if given, else `CONGRUENCE_KIT_BUDGET`, else the default.
    pub fn with_budget(flag: Option<u128>, skip: BTreeSet<Skip>) -> Result<Self> {
        let budget = match flag {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| KitError::Usage(format!("{BUDGET_ENV}={s:?} is not a nonnegative integer")))?,
                Err(_) => DEFAULT_BUDGET,
            },
        };
        Ok(Self { budget, skip })
    }

    pub fn skips(&self, s: Skip) -> bool {
        self.skip.contains(&s)
    }

    pub fn search(&self) -> SearchOptions {
        SearchOptions { budget: self.budget, fast_paths: !self.skips(Skip::FastPath) }
    }
}

fn check_modulus(d: u64) -> Result<()> {
    if d < 2 {
        return Err(KitError::Usage(format!("--d must be at least 2 (got {d})")));
    }
    Ok(())
}

/// `H_1(M; Z_d)`, or `None` for inputs that carry no homology.
pub fn homology_of(input: &Input, d: u64) -> Result<Option<ZdModuleStructure>> {
    Ok(match input {
        Input::Surgery { presentation, .. } => Some(presentation.homology_zd(d)),
        Input::DoubleBranchedCover { reference, .. } => Some(dbc_homology(reference, d)?),
        Input::Matrix(m) => Some(cokernel_mod(m, d)),
        Input::Form(_) => None,
    })
}

/// The cup-product form on `H^1(M; Z_d)` where it can be derived: given
/// forms, 0-framed split presentations with triple data, lens spaces
/// `L(ds, q)`, and manifolds with `H_1(M; Z_d) = 0`.
pub fn form_of(input: &Input, d: u64) -> Result<TrilinearFormZd, String> {
    if let Input::Form(t) = input {
        return if t.modulus() == d {
            Ok(t.clone())
        } else {
            Err(format!("form is over Z_{}, not Z_{d}", t.modulus()))
        };
    }
    if let Input::Surgery { presentation: p, .. } = input {
        if p.len() == 1 {
            let c = p.coeffs()[0];
            let num = c.numerator().unsigned_abs();
            if num != 0 && num % d == 0 {
                return lens_form(d, num / d, c.denominator()).map_err(|e| e.to_string());
            }
        }
        match form_from_split_presentation(p, d) {
            Ok(t) => return Ok(t),
            Err(FormError::MissingTriple) => {
                return Err("presentation has no triple linking data (give \"triple\": [] for none)".into())
            }
            Err(_) => {}
        }
    }
    match homology_of(input, d) {
        Ok(Some(h)) if h.is_trivial() => Ok(TrilinearFormZd::zero(d, 0).expect("valid modulus")),
        Ok(Some(_)) => Err(format!("no cup-product form is derivable for this {}", input.kind())),
        Ok(None) => unreachable!("forms are handled above"),
        Err(e) => Err(e.to_string()),
    }
}

pub fn homology(command: Vec<String>, r: &Resolved, d: u64) -> Result<Report> {
    check_modulus(d)?;
    let h = homology_of(&r.input, d)?
        .ok_or_else(|| KitError::Usage(format!("{} is a {}, which has no homology", r.token, r.input.kind())))?;
    let mut report = Report::new(command);
    report.input(r);
    report.push(Claim::new(
        "homology",
        Status::Pass,
        format!("H_1({}; Z_{d}) = {h}", r.label),
        json!({ "d": d, "structure": h.to_string(), "factors": h.factors() }),
    ));
    Ok(report)
}

fn matrix_json(m: &ZdMatrix) -> Value {
    json!((0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn evidence_json(e: &Evidence) -> Value {
    match e {
        Evidence::None => Value::Null,
        Evidence::Homology { a, b } => json!({ "a": a.to_string(), "b": b.to_string() }),
        Evidence::FormRanks { a, b } => json!({ "form_ranks": [a, b] }),
        Evidence::Forms { compared_modulus, a_is_zero, b_is_zero, witness } => json!({
            "compared_modulus": compared_modulus,
            "a_is_zero": a_is_zero,
            "b_is_zero": b_is_zero,
            "witness": witness.as_ref().map(matrix_json),
        }),
        Evidence::Burnside { free_rank, certificate_order } => {
            json!({ "free_rank": free_rank, "certificate_order": certificate_order.to_string() })
        }
    }
}

fn verdict_status(s: VerdictStatus) -> Status {
    match s {
        VerdictStatus::Distinguished => Status::Pass,
        VerdictStatus::Inconclusive => Status::Inconclusive,
    }
}

fn homology_claim(a: &Resolved, b: &Resolved, d: u64) -> Claim {
    let (ha, hb) = match (homology_of(&a.input, d), homology_of(&b.input, d)) {
        (Ok(Some(ha)), Ok(Some(hb))) => (ha, hb),
        (Err(e), _) | (_, Err(e)) => return Claim::new("homology", Status::Fail, e.to_string(), Value::Null),
        _ => return Claim::new("homology", Status::Inconclusive, "homology not available for a form input", Value::Null),
    };
    let payload = evidence_json(&Evidence::Homology { a: ha.clone(), b: hb.clone() });
    if ha == hb {
        Claim::new("homology", Status::Inconclusive, format!("both have H_1(-; Z_{d}) = {ha}"), payload)
    } else {
        Claim::new("homology", Status::Pass, format!("H_1(-; Z_{d}) differs: {ha} vs {hb}"), payload)
    }
}

fn cup_form_claim(a: &Resolved, b: &Resolved, d: u64, options: &Options) -> Claim {
    let (fa, fb) = match (form_of(&a.input, d), form_of(&b.input, d)) {
        (Ok(fa), Ok(fb)) => (fa, fb),
        (Err(e), _) => return Claim::new("cup-form", Status::Inconclusive, format!("{}: {e}", a.label), Value::Null),
        (_, Err(e)) => return Claim::new("cup-form", Status::Inconclusive, format!("{}: {e}", b.label), Value::Null),
    };
    match obstruct_weak_congruence(&fa, &fb, d, options.search()) {
        Ok(v) => Claim::new("cup-form", verdict_status(v.status), v.reason, evidence_json(&v.evidence)),
        Err(FormError::Search(ZmodError::BudgetExceeded { estimated_order: order, budget })) => Claim::new(
            "cup-form",
            Status::Fail,
            format!("search budget exceeded: |GL| = {order} > {budget}"),
            json!({ "budget_exceeded": { "order": order.to_string(), "budget": budget.to_string() } }),
        ),
        Err(e) => Claim::new("cup-form", Status::Fail, e.to_string(), Value::Null),
    }
}

fn burnside_claim(a: &Resolved, b: &Resolved, d: u64) -> Claim {
    match (a.input.group(), b.input.group()) {
        (Some(ga), Some(gb)) => {
            let v = burnside_obstruction(ga, gb, d);
            Claim::new("burnside", verdict_status(v.status), v.reason, evidence_json(&v.evidence))
        }
        _ => Claim::new(
            "burnside",
            Status::Inconclusive,
            "fundamental group not known for both inputs",
            Value::Null,
        ),
    }
}

/// Runs every invariant that is not skipped. The final `verdict` claim
/// passes iff some invariant distinguishes the inputs.
pub fn distinguish(command: Vec<String>, a: &Resolved, b: &Resolved, d: u64, options: &Options) -> Result<Report> {
    check_modulus(d)?;
    let mut report = Report::new(command);
    report.input(a);
    report.input(b);
    if !options.skips(Skip::Homology) {
        report.push(homology_claim(a, b, d));
    }
    if !options.skips(Skip::CupForm) {
        report.push(cup_form_claim(a, b, d, options));
    }
    if !options.skips(Skip::Burnside) {
        report.push(burnside_claim(a, b, d));
    }
    let by: Vec<String> = report.claims.iter().filter(|c| c.status == Status::Pass).map(|c| c.id.clone()).collect();
    let verdict = if by.is_empty() {
        Claim::new(
            "verdict",
            Status::Inconclusive,
            format!("no invariant shows {} and {} are not weakly {d}-congruent", a.label, b.label),
            json!({ "distinguished_by": by }),
        )
    } else {
        Claim::new(
            "verdict",
            Status::Pass,
            format!("{} and {} are not weakly {d}-congruent ({})", a.label, b.label, by.join(", ")),
            json!({ "distinguished_by": by }),
        )
    };
    report.push(verdict);
    Ok(report)
}

/// Certificate that `B(r, d)` is nonabelian.
pub fn burnside(command: Vec<String>, d: u64, r: usize) -> Result<Report> {
    let cert = make_certificate(d, r)?;
    let ok = verify_certificate(&cert);
    let mut report = Report::new(command);
    report.push(Claim::check(
        "burnside-certificate",
        ok,
        format!(
            "{} certificate: group of order {}, exponent dividing {d}, {r} generator images with a non-commuting pair",
            if ok { "verified" } else { "unverified" },
            cert.group.order()
        ),
        json!({ "verified": ok, "certificate": CertificateJson::from_certificate(&cert) }),
    ));
    Ok(report)
}

/// Re-verifies a stored certificate.
pub fn verify(command: Vec<String>, path: &str) -> Result<Report> {
    let text = std::fs::read_to_string(path).map_err(|err| KitError::Io { path: path.into(), err })?;
    let parsed: CertificateJson = serde_json::from_str(&text).map_err(|e| KitError::Parse {
        source_name: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let cert = parsed.to_certificate()?;
    let ok = verify_certificate(&cert);
    let mut report = Report::new(command);
    report.inputs.push(crate::report::InputDigest {
        token: path.to_string(),
        label: "certificate".to_string(),
        sha256: crate::input::sha256_hex(text.as_bytes()),
    });
    report.push(Claim::check(
        "burnside-certificate",
        ok,
        if ok {
            format!("certificate proves B({}, {}) nonabelian", cert.r, cert.d)
        } else {
            "certificate does not verify".to_string()
        },
        json!({ "verified": ok }),
    ));
    Ok(report)
}

/// What `cupform` evaluates.
pub enum CupFormSource<'a> {
    Lens { s: u64, q: i64 },
    Input(&'a Resolved),
}

pub fn cupform(command: Vec<String>, source: CupFormSource<'_>, d: u64) -> Result<Report> {
    check_modulus(d)?;
    let mut report = Report::new(command);
    let (label, form) = match source {
        CupFormSource::Lens { s, q } => (format!("L({}, {q})", d * s), lens_form(d, s, q)?),
        CupFormSource::Input(r) => {
            report.input(r);
            (r.label.clone(), form_of(&r.input, d).map_err(KitError::Usage)?)
        }
    };
    let doc = FormJson::from_form(&form);
    let entries: Vec<String> = doc
        .entries
        .iter()
        .map(|e| format!("({},{},{})={}", e.ijk[0], e.ijk[1], e.ijk[2], e.value))
        .collect();
    let detail = format!(
        "cup-product form of {label} over Z_{d}, rank {}: {}",
        form.rank(),
        if entries.is_empty() { "zero".to_string() } else { entries.join(" ") }
    );
    report.push(Claim::new("cup-form", Status::Pass, detail, json!({ "form": doc })));
    Ok(report)
}

/// Compares a form with the zero form of the same rank, reporting how the
/// search ended.
pub fn compare_with_zero(t: &TrilinearFormZd, options: &Options) -> Result<(bool, Value), FormError> {
    let zero = TrilinearFormZd::zero(t.modulus(), t.rank())?;
    Ok(match forms_equivalent(t, &zero, options.search())? {
        FormComparison::Equivalent(w) => (true, json!({ "witness": matrix_json(w.matrix()) })),
        FormComparison::Inequivalent(Inequivalence::ExhaustiveSearch { examined }) => {
            (false, json!({ "exhaustive_search": examined.to_string() }))
        }
        FormComparison::Inequivalent(Inequivalence::ZeroVersusNonzero) => (false, json!({ "fast_path": "zero form" })),
        FormComparison::Inequivalent(Inequivalence::RankMismatch { a, b }) => (false, json!({ "form_ranks": [a, b] })),
    })
}
