use std::path::Path;

use num_rational::BigRational;
use serde::Serialize;

use super::{render, regress, CliError, Command, Report, RunConfig};
use crate::algebra::{default_var_names, parse_polynomial, ExactField, Field, MonomialOrder, Polynomial, QuadraticField, Rationals};
use crate::arrangement::{
    lattice_isomorphic, parse_arrangement, parse_arrangement_file, parse_family, Arrangement, ArrangementFamily,
    LoadedArrangement, LoadedFamily,
};
use crate::error::{ArrangementError, ComputeError};
use crate::fixtures;
use crate::matroid::{
    affine_automorphism, build_tn, qt_arrangement, realization_labeling, triple_count_formula, triple_points,
    verify_matroid, RealizationMatrix, RealizationOutcome,
};
use crate::resolution::multiprime::{invariants, run_task, Backend, Computed, FieldTask};
use crate::resolution::{BettiData, HilbertPolynomial};
use crate::ziegler::{
    classify_freeness, compare_arrangements, cone_betti_prediction, cone_hilbert_polynomial, cone_syzygy_basis,
    spec_flags, spec_sample, tameness_check, verify_cone_basis, ConeHilbert, FreenessClass, SpecSample,
    ZieglerReport,
};

macro_rules! with_arrangement {
    ($loaded:expr, $a:ident => $body:expr) => {
        match $loaded {
            LoadedArrangement::Rational($a) => $body,
            LoadedArrangement::Quadratic($a) => $body,
        }
    };
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// A scalar such as `3`, `-7/2` or `3 + sqrt(5)`.
pub(crate) fn parse_scalar<F: Field>(field: &F, text: &str) -> Result<F::Elem, CliError> {
    let p = parse_polynomial(field, &[], text)?;
    Ok(p.terms().first().map_or_else(|| field.zero(), |(_, c)| c.clone()))
}

fn log_primes<T>(config: &RunConfig, what: &str, c: &Computed<T>) {
    if config.verbose > 0 && !c.primes.is_empty() {
        eprintln!("{what}: primes {:?}, dissenting {:?}", c.primes, c.dissenting);
    }
}

pub fn run_command(config: &RunConfig) -> Result<String, CliError> {
    let f = config.format;
    match &config.command {
        Command::Betti { files } => {
            let results = files.iter().map(|p| betti(config, p)).collect::<Result<Vec<_>, _>>()?;
            Ok(render(&BettiList(results), f))
        }
        Command::Hilbert { file, degrees } => Ok(render(&hilbert(config, file, *degrees)?, f)),
        Command::Lattice { file, against } => Ok(render(&lattice(file, against.as_deref())?, f)),
        Command::Ziegler {
            first,
            second,
            family,
            samples,
            reference,
        } => Ok(render(&ziegler(config, first, second, family.as_deref(), samples, reference)?, f)),
        Command::Cone { file, k, direct } => Ok(render(&cone(config, file, *k, *direct)?, f)),
        Command::Tame { file } => Ok(render(&tame(config, file)?, f)),
        Command::Tn { n, automorphisms } => Ok(render(&tn(*n, *automorphisms)?, f)),
        Command::Qt { t } => Ok(render(&qt(config, t)?, f)),
        Command::Realize { point, matrix } => Ok(render(&realize(config, point, matrix.as_deref())?, f)),
        Command::Regress { golden, bless } => regress::run_regress(config, golden.clone(), *bless),
    }
}

// betti ---------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BettiReport {
    pub file: String,
    pub betti: BettiData,
    pub mdr: Option<u32>,
    pub freeness: FreenessClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_label: Option<String>,
    pub primes: Vec<u64>,
}

#[derive(Debug, Serialize)]
#[serde(transparent)]
pub struct BettiList(pub Vec<BettiReport>);

impl Report for BettiList {
    fn text(&self) -> String {
        match self.0.as_slice() {
            [one] => one.betti.to_string(),
            many => many.iter().map(|r| format!("{}: {}", r.file, r.betti)).collect::<Vec<_>>().join("\n"),
        }
    }
}

pub(crate) fn betti_of<F: ExactField>(
    config: &RunConfig,
    name: &str,
    a: &Arrangement<F>,
    backend: &Backend,
) -> Result<BettiReport, CliError> {
    let inv = invariants(&a.defining_polynomial(), backend)?;
    log_primes(config, name, &inv);
    let fr = classify_freeness(&inv.value.betti, a.len() as u32);
    Ok(BettiReport {
        file: name.to_string(),
        mdr: inv.value.mdr(),
        betti: inv.value.betti,
        freeness: fr.class,
        type_label: fr.label,
        primes: inv.primes,
    })
}

fn betti(config: &RunConfig, path: &Path) -> Result<BettiReport, CliError> {
    let loaded = parse_arrangement_file(path)?;
    with_arrangement!(loaded, a => {
        let backend = config.backend(a.field().descriptor())?;
        betti_of(config, &file_name(path), &a, &backend)
    })
}

// hilbert -------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HilbertReport {
    pub file: String,
    pub values: Vec<i64>,
    pub polynomial: HilbertPolynomial,
    /// Dimension of the projective singular locus, `-1` when smooth.
    pub sigma_dim: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilization: Option<usize>,
    pub series_numerator: Vec<i64>,
}

impl Report for HilbertReport {
    fn text(&self) -> String {
        let values: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        let mut out = format!(
            "H(0..{}): {}\nHilbert polynomial: {}",
            self.values.len() - 1,
            values.join(", "),
            self.polynomial
        );
        if let Some(st) = self.stabilization {
            out.push_str(&format!("\nstabilization: {st}"));
        }
        out
    }
}

pub(crate) fn hilbert_of<F: ExactField>(
    config: &RunConfig,
    name: &str,
    a: &Arrangement<F>,
    backend: &Backend,
    degrees: usize,
) -> Result<HilbertReport, CliError> {
    let g = a.defining_polynomial();
    let num = crate::resolution::multiprime::numerator(&g, backend)?;
    log_primes(config, name, &num);
    let num = num.value;
    let data = crate::resolution::hilbert::hilbert_data_from_numerator(&num, g.nvars())?;
    let stabilization = match data.polynomial {
        HilbertPolynomial::Constant { .. } => Some(
            crate::resolution::hilbert::stabilization_from_numerator(&num, g.nvars(), a.len() as u32)?.0,
        ),
        HilbertPolynomial::Linear { .. } => None,
    };
    Ok(HilbertReport {
        file: name.to_string(),
        values: num.series_over_one_minus_t(g.nvars(), degrees + 1),
        polynomial: data.polynomial,
        sigma_dim: data.sigma_dim,
        stabilization,
        series_numerator: num.coeffs().to_vec(),
    })
}

fn hilbert(config: &RunConfig, path: &Path, degrees: usize) -> Result<HilbertReport, CliError> {
    let loaded = parse_arrangement_file(path)?;
    with_arrangement!(loaded, a => {
        let backend = config.backend(a.field().descriptor())?;
        hilbert_of(config, &file_name(path), &a, &backend, degrees)
    })
}

// lattice -------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlatCount {
    pub rank: usize,
    pub multiplicity: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeReport {
    pub file: String,
    pub hyperplanes: usize,
    pub rank: usize,
    pub flats: Vec<FlatCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tjurina: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub against: Option<String>,
    /// Image of each hyperplane under an isomorphism, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphism: Option<Option<Vec<usize>>>,
}

impl Report for LatticeReport {
    fn text(&self) -> String {
        let mut lines = vec![format!("{}: {} hyperplanes, rank {}", self.file, self.hyperplanes, self.rank)];
        for f in &self.flats {
            lines.push(format!("rank {}: {} flats of multiplicity {}", f.rank, f.count, f.multiplicity));
        }
        if let Some(t) = self.tjurina {
            lines.push(format!("total Tjurina number: {t}"));
        }
        if let (Some(other), Some(iso)) = (&self.against, &self.isomorphism) {
            lines.push(match iso {
                Some(p) => format!("isomorphic to {other}: {}", render_perm(p)),
                None => format!("not isomorphic to {other}"),
            });
        }
        lines.join("\n")
    }
}

fn render_perm(p: &[usize]) -> String {
    p.iter().enumerate().map(|(i, j)| format!("{}->{}", i + 1, j + 1)).collect::<Vec<_>>().join(" ")
}

fn lattice(path: &Path, against: Option<&Path>) -> Result<LatticeReport, CliError> {
    let loaded = parse_arrangement_file(path)?;
    let (l, tjurina, n) = with_arrangement!(loaded, a => (a.intersection_lattice(), a.tjurina_number().ok(), a.len()));
    let mut report = LatticeReport {
        file: file_name(path),
        hyperplanes: n,
        rank: l.ambient_rank,
        flats: l
            .profile()
            .into_iter()
            .map(|((rank, multiplicity), count)| FlatCount {
                rank,
                multiplicity,
                count,
            })
            .collect(),
        tjurina,
        against: None,
        isomorphism: None,
    };
    if let Some(other) = against {
        let loaded = parse_arrangement_file(other)?;
        let lb = with_arrangement!(loaded, b => b.intersection_lattice());
        report.against = Some(file_name(other));
        report.isomorphism = Some(lattice_isomorphic(&l, &lb));
    }
    Ok(report)
}

// ziegler -------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZieglerCliReport {
    pub first: String,
    pub second: String,
    #[serde(flatten)]
    pub report: ZieglerReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec0: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<bool>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

impl Report for ZieglerCliReport {
    fn text(&self) -> String {
        let r = &self.report;
        let mut lines = vec![
            format!("lattices isomorphic: {}", yes_no(r.lattice_iso.is_some())),
            format!("betti {}: {}", self.first, r.betti_a),
            format!("betti {}: {}", self.second, r.betti_b),
            format!("is_ziegler_pair: {}", yes_no(r.is_ziegler_pair)),
            format!(
                "HP: {} ({} / {})",
                yes_no(r.hp),
                r.hilbert_polynomial_a,
                r.hilbert_polynomial_b
            ),
        ];
        lines.push(match r.hf_difference {
            Some(d) => format!("HF: false at degree {} ({} vs {})", d.degree, d.first, d.second),
            None => "HF: true".into(),
        });
        let show = |m: Option<u32>| m.map_or("-".into(), |v| v.to_string());
        lines.push(format!("MDR: {} ({} vs {})", yes_no(r.mdr), show(r.mdr_a), show(r.mdr_b)));
        for s in &r.spec_samples {
            lines.push(match &s.outcome {
                Ok((iso, b)) => format!("t = {}: lattice {}, {}", s.t, if *iso { "same" } else { "different" }, b),
                Err(e) => format!("t = {}: {e}", s.t),
            });
        }
        if let (Some(s0), Some(s)) = (self.spec0, self.spec) {
            lines.push(format!("SPEC0: {}", yes_no(s0)));
            lines.push(format!("SPEC: {}", yes_no(s)));
        }
        lines.join("\n")
    }
}

fn family_samples<F: ExactField>(
    config: &RunConfig,
    family: &ArrangementFamily<F>,
    samples: &[String],
    reference_t: &str,
    reference: &crate::arrangement::IntersectionLattice,
) -> Result<(Vec<SpecSample>, String), CliError> {
    let field = family.field();
    let ts = samples.iter().map(|s| parse_scalar(field, s)).collect::<Result<Vec<_>, _>>()?;
    let reference_t = field.format_elem(&parse_scalar(field, reference_t)?);
    let backend = config.backend(field.descriptor())?;
    Ok((spec_sample(family, &ts, reference, &backend), reference_t))
}

fn ziegler(
    config: &RunConfig,
    first: &Path,
    second: &Path,
    family: Option<&Path>,
    samples: &[String],
    reference_t: &str,
) -> Result<ZieglerCliReport, CliError> {
    let la = parse_arrangement_file(first)?;
    let lb = parse_arrangement_file(second)?;
    let fa = with_arrangement!(&la, a => a.field().descriptor());
    let fb = with_arrangement!(&lb, b => b.field().descriptor());
    let backend = config.backend(fa)?;
    config.backend(fb)?;
    let mut report = with_arrangement!(&la, a => with_arrangement!(&lb, b => compare_arrangements(a, b, &backend)))?;
    let (mut spec0, mut spec) = (None, None);
    if let Some(fam) = family {
        if samples.is_empty() {
            return Err(CliError::Usage("--family needs --samples".into()));
        }
        let text = read(fam)?;
        let reference = with_arrangement!(&la, a => a.intersection_lattice());
        let (s, rt) = match parse_family(&fam.display().to_string(), &text)? {
            LoadedFamily::Rational(f) => family_samples(config, &f, samples, reference_t, &reference)?,
            LoadedFamily::Quadratic(f) => family_samples(config, &f, samples, reference_t, &reference)?,
        };
        let (a, b) = spec_flags(&s, &rt);
        report.spec_samples = s;
        spec0 = Some(a);
        spec = Some(b);
    }
    Ok(ZieglerCliReport {
        first: file_name(first),
        second: file_name(second),
        report,
        spec0,
        spec,
    })
}

// cone ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectCone {
    pub polynomial: HilbertPolynomial,
    pub betti: BettiData,
    pub prediction_matches: bool,
    pub basis_verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConeReport {
    pub file: String,
    pub k: usize,
    pub curve_betti: BettiData,
    pub predicted_betti: BettiData,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<ConeHilbert>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct: Option<DirectCone>,
}

impl Report for ConeReport {
    fn text(&self) -> String {
        let mut lines = vec![
            format!("curve: {}", self.curve_betti),
            format!("predicted {}-fold cone: {}", self.k, self.predicted_betti),
        ];
        if let Some(h) = &self.formula {
            lines.push(format!(
                "cone Hilbert polynomial: {} (tau = {}, st = {}, sum of H below st = {})",
                h.polynomial(),
                h.tau,
                h.st,
                h.head_sum
            ));
        }
        if let Some(d) = &self.direct {
            lines.push(format!("direct Hilbert polynomial: {}", d.polynomial));
            lines.push(format!("direct: {}", d.betti));
            lines.push(format!("prediction matches: {}", yes_no(d.prediction_matches)));
            lines.push(format!("basis verified: {}", yes_no(d.basis_verified)));
        }
        lines.join("\n")
    }
}

struct VerifyConeTask(usize);

impl FieldTask for VerifyConeTask {
    type Output = bool;
    fn run<K: Field>(&self, polys: &[Polynomial<K>]) -> Result<bool, ComputeError> {
        verify_cone_basis(&polys[0], self.0, MonomialOrder::Grevlex)
    }
}

fn cone_of<F: ExactField>(
    config: &RunConfig,
    name: &str,
    a: &Arrangement<F>,
    k: usize,
    direct: bool,
) -> Result<ConeReport, CliError> {
    if a.ambient_dim() != 2 {
        return Err(ArrangementError::UnsupportedDimension(a.ambient_dim()).into());
    }
    if k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let backend = config.backend(a.field().descriptor())?;
    let curve = invariants(&a.defining_polynomial(), &backend)?;
    log_primes(config, name, &curve);
    let predicted_betti = cone_betti_prediction(&curve.value.betti, k);
    let formula = if k == 1 { Some(cone_hilbert_polynomial(a, &backend)?) } else { None };
    let direct = if direct {
        let c = a.cone(k);
        let inv = invariants(&c.defining_polynomial(), &backend)?;
        let verified = run_task(&[a.defining_polynomial()], &backend, &VerifyConeTask(k))?;
        Some(DirectCone {
            polynomial: inv.value.hilbert()?.polynomial,
            prediction_matches: inv.value.betti == predicted_betti,
            betti: inv.value.betti,
            basis_verified: verified.value,
        })
    } else {
        None
    };
    Ok(ConeReport {
        file: name.to_string(),
        k,
        curve_betti: curve.value.betti,
        predicted_betti,
        formula,
        direct,
    })
}

fn cone(config: &RunConfig, path: &Path, k: usize, direct: bool) -> Result<ConeReport, CliError> {
    let loaded = parse_arrangement_file(path)?;
    with_arrangement!(loaded, a => cone_of(config, &file_name(path), &a, k, direct))
}

// tame ----------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TameReport {
    pub file: String,
    /// `(x, y, z, -(d - 1) w)` for the cone of degree `d`.
    pub rho0: String,
    pub rho1_degree: u32,
    pub tame: bool,
}

impl Report for TameReport {
    fn text(&self) -> String {
        format!(
            "rho0 = {}\nrho1: minimal syzygy of degree {}\ntame: {}",
            self.rho0,
            self.rho1_degree,
            yes_no(self.tame)
        )
    }
}

struct TameTask;

impl FieldTask for TameTask {
    type Output = (bool, u32);
    fn run<K: Field>(&self, polys: &[Polynomial<K>]) -> Result<(bool, u32), ComputeError> {
        let g = &polys[0];
        let deg_g = g.homogeneous_degree().unwrap_or(0);
        let basis = cone_syzygy_basis(g, 1, MonomialOrder::Grevlex)?;
        if basis.len() < 2 {
            return Err(ComputeError::Internal("the cone has fewer than two syzygies".into()));
        }
        let d1 = basis[1].degree().unwrap_or(deg_g) - deg_g;
        Ok((tameness_check(&basis[0], &basis[1])?, d1))
    }
}

fn tame(config: &RunConfig, path: &Path) -> Result<TameReport, CliError> {
    let loaded = parse_arrangement_file(path)?;
    with_arrangement!(loaded, a => {
        if a.ambient_dim() != 2 {
            return Err(ArrangementError::UnsupportedDimension(a.ambient_dim()).into());
        }
        let backend = config.backend(a.field().descriptor())?;
        let r = run_task(&[a.defining_polynomial()], &backend, &TameTask)?;
        let names = default_var_names(4);
        Ok(TameReport {
            file: file_name(path),
            rho0: format!("({}, {}, {}, -{}*{})", names[0], names[1], names[2], a.len(), names[3]),
            rho1_degree: r.value.1,
            tame: r.value.0,
        })
    })
}

// tn ------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AutomorphismCheck {
    pub maps_checked: usize,
    pub preserving: usize,
    /// Translations `a` with `3a = 0 mod n`, the ones that keep `i + j + k = 0`.
    pub preserving_translations: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TnReport {
    pub n: usize,
    pub bases: usize,
    pub dependent_triples: Vec<Vec<usize>>,
    pub matroid_axioms: bool,
    pub triple_count: usize,
    pub triple_count_formula: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphisms: Option<AutomorphismCheck>,
}

impl Report for TnReport {
    fn text(&self) -> String {
        let triples: Vec<String> = self
            .dependent_triples
            .iter()
            .map(|t| format!("{{{}}}", t.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let mut lines = vec![
            format!("T_{}: {} bases, matroid axioms {}", self.n, self.bases, yes_no(self.matroid_axioms)),
            format!(
                "dependent triples ({}, formula {}): {}",
                self.triple_count,
                self.triple_count_formula,
                triples.join(" ")
            ),
        ];
        if let Some(a) = &self.automorphisms {
            let tr: Vec<String> = a.preserving_translations.iter().map(|t| t.to_string()).collect();
            lines.push(format!(
                "affine maps u i + a: {} of {} preserve bases (translations a = {})",
                a.preserving,
                a.maps_checked,
                tr.join(", ")
            ));
        }
        lines.join("\n")
    }
}

fn tn(n: usize, automorphisms: bool) -> Result<TnReport, CliError> {
    let m = build_tn(n)?;
    let dependent: Vec<Vec<usize>> = m
        .nonbases()
        .into_iter()
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    let automorphisms = if automorphisms {
        let mut checked = 0;
        let mut preserving = 0;
        let mut translations = Vec::new();
        for u in (1..n).filter(|&u| num_integer::gcd(u, n) == 1) {
            for a in 0..n {
                checked += 1;
                if affine_automorphism(&m, u, a)? {
                    preserving += 1;
                    if u == 1 {
                        translations.push(a);
                    }
                }
            }
        }
        Some(AutomorphismCheck {
            maps_checked: checked,
            preserving,
            preserving_translations: translations,
        })
    } else {
        None
    };
    Ok(TnReport {
        n,
        bases: m.bases.len(),
        triple_count: dependent.len(),
        dependent_triples: dependent,
        matroid_axioms: verify_matroid(&m),
        triple_count_formula: triple_count_formula(n),
        automorphisms,
    })
}

// qt ------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QtReport {
    pub t: String,
    pub forms: Vec<String>,
    /// Element of `T_10` assigned to each line.
    pub labeling: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple_points: Option<Vec<String>>,
    pub betti: BettiReport,
    pub hilbert: HilbertReport,
}

impl Report for QtReport {
    fn text(&self) -> String {
        let mut lines = vec![format!("Q_t at t = {}", self.t)];
        for (i, f) in self.forms.iter().enumerate() {
            lines.push(format!("  {}: {f}", i + 1));
        }
        lines.push(match &self.labeling {
            Some(l) => format!("realizes T_10: {}", l.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")),
            None => "does not realize T_10".into(),
        });
        if let Some(p) = &self.triple_points {
            lines.push(format!("triple points: {}", p.join(", ")));
        }
        let label = self.betti.type_label.as_ref().map_or(String::new(), |l| format!(" (type {l})"));
        lines.push(format!("{}{label}", self.betti.betti));
        lines.push(self.hilbert.text());
        lines.join("\n")
    }
}

fn qt_of<F: ExactField>(config: &RunConfig, shown: String, a: Arrangement<F>) -> Result<QtReport, CliError> {
    let backend = config.backend(a.field().descriptor())?;
    let t10 = build_tn(10)?;
    let name = format!("Q_{shown}");
    Ok(QtReport {
        forms: a.form_strings(),
        labeling: realization_labeling(&a, &t10),
        triple_points: None,
        betti: betti_of(config, &name, &a, &backend)?,
        hilbert: hilbert_of(config, &name, &a, &backend, 15)?,
        t: shown,
    })
}

fn render_point(p: &[num_bigint::BigInt]) -> String {
    format!("[{}]", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(":"))
}

fn qt(config: &RunConfig, t: &str) -> Result<QtReport, CliError> {
    if t.contains("sqrt") {
        let k = QuadraticField::new(5)?;
        let v = parse_scalar(&k, t)?;
        let a = qt_arrangement(&k, &v)?;
        qt_of(config, k.format_elem(&v), a)
    } else {
        let v = parse_scalar(&Rationals, t)?;
        let a = qt_arrangement(&Rationals, &v)?;
        let points = triple_points(&a)?.iter().map(|p| render_point(p)).collect();
        let mut r = qt_of(config, Rationals.format_elem(&v), a)?;
        r.triple_points = Some(points);
        Ok(r)
    }
}

// realize -------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RealizeReport {
    pub point: Vec<String>,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_matches_reference: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiData>,
}

impl Report for RealizeReport {
    fn text(&self) -> String {
        let head = format!("point ({})", self.point.join(", "));
        if !self.violations.is_empty() {
            return format!("{head}: forbidden, vanishing {}", self.violations.join("; "));
        }
        let mut lines = vec![head];
        if let Some(m) = self.lattice_matches_reference {
            lines.push(format!("lattice matches the reference arrangement: {}", yes_no(m)));
        }
        if let Some(b) = &self.betti {
            lines.push(b.to_string());
        }
        lines.join("\n")
    }
}

pub(crate) fn realize_point(
    config: &RunConfig,
    matrix: &RealizationMatrix,
    point: &[BigRational],
) -> Result<RealizeReport, CliError> {
    if point.len() != matrix.params.len() {
        return Err(CliError::Usage(format!(
            "expected {} coordinates, got {}",
            matrix.params.len(),
            point.len()
        )));
    }
    let shown = point.iter().map(|q| Rationals.format_elem(q)).collect();
    match matrix.evaluate(point)? {
        RealizationOutcome::Violations(v) => Ok(RealizeReport {
            point: shown,
            violations: v,
            lattice_matches_reference: None,
            betti: None,
        }),
        RealizationOutcome::Arrangement(a) => {
            let reference = match parse_arrangement("E.arr", fixtures::E)? {
                LoadedArrangement::Rational(e) => e.intersection_lattice(),
                LoadedArrangement::Quadratic(e) => e.intersection_lattice(),
            };
            let matches = lattice_isomorphic(&a.intersection_lattice(), &reference).is_some();
            let backend = config.backend(a.field().descriptor())?;
            let inv = invariants(&a.defining_polynomial(), &backend)?;
            Ok(RealizeReport {
                point: shown,
                violations: Vec::new(),
                lattice_matches_reference: Some(matches),
                betti: Some(inv.value.betti),
            })
        }
    }
}

fn realize(config: &RunConfig, point: &[String], matrix: Option<&Path>) -> Result<RealizeReport, CliError> {
    let text = match matrix {
        Some(p) => read(p)?,
        None => fixtures::REALIZATION.to_string(),
    };
    let m = RealizationMatrix::parse(&text)?;
    let q = point.iter().map(|s| parse_scalar(&Rationals, s)).collect::<Result<Vec<_>, _>>()?;
    realize_point(config, &m, &q)
}
