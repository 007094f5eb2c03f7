//! Subcommands of the `superpair` binary.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use superpair::catalog::{by_name, CatalogObject};
use superpair::faulkner::{faulkner_backward_with, faulkner_forward_with, Correspondence};
use superpair::gjsp::MEMBERSHIP_PAIRING;
use superpair::tensorops::verify_tensor_shift;
use superpair::{
    check_pair_hom, gjsp_direct_sum, gjsp_tensor, gjsp_tensor_right, tensor_factorize, tensor_shift, CheckConfig, Field,
    GjspObject, Matrix, Parity, PropertyOutcome, QuadExt, QuadRing, Report, Scalar, ShiftParameter, Sign,
};

use crate::format::{
    load_aux, load_object, parse_field_name, parse_quadratic, vectors, Entry, Loaded, MapFile, MatrixBlock, ObjectFile,
    SplitFile, SubspaceFile,
};
use crate::output::{CommandReport, ReportJson, Status, Timing};
use crate::{canonical_json, CliError, FIELD_ENV};

#[derive(Debug, Parser)]
#[command(name = "superpair", version, about = "Exact checks and constructions for Lie supermodules and generalized Jordan superpairs")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub report: Format,
    /// List every failing index tuple instead of only the first.
    #[arg(long, global = true)]
    pub all_witnesses: bool,
    /// Worker threads for the checks; all cores by default.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Add the elapsed time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Lie,
    Module,
    Form,
    Gjsp,
    Pairing,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of one block of an object file.
    Check { kind: CheckKind, file: PathBuf },
    /// Pair with pairing of a metric module triple.
    Forward {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Metric module triple of a pair with pairing.
    Backward {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply both constructions and compare with the input.
    Roundtrip {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Tensor product of two pairs with pairing.
    Tensor {
        file1: PathBuf,
        file2: PathBuf,
        /// Use the right tensor product.
        #[arg(long)]
        right: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Direct sum of pairs with pairing.
    Dsum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Tensor shift by the one-dimensional object with parameters (lambda, parity).
    Shift {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        parity: u8,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a pair of maps is an isomorphism FILE1 → FILE2.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Transfer an automorphism across the correspondence.
    AutTransfer {
        file: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        /// Work over `dual` numbers or `quad:POLY`, e.g. `quad:t^2-2`.
        #[arg(long)]
        ring: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a catalog object file.
    Catalog {
        name: String,
        /// Parameters; put negative values after `--`.
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Factor a pair along an orthogonal split of its inner structure algebra.
    Factorize {
        file: PathBuf,
        #[arg(long)]
        split: PathBuf,
        #[arg(long)]
        w: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Check { kind, .. } => format!("check {}", kind.to_possible_value().expect("named").get_name()),
            Command::Forward { .. } => "forward".into(),
            Command::Backward { .. } => "backward".into(),
            Command::Roundtrip { .. } => "roundtrip".into(),
            Command::Tensor { right, .. } => if *right { "tensor --right" } else { "tensor" }.into(),
            Command::Dsum { .. } => "dsum".into(),
            Command::Shift { .. } => "shift".into(),
            Command::Iso { .. } => "iso".into(),
            Command::AutTransfer { .. } => "aut-transfer".into(),
            Command::Catalog { .. } => "catalog".into(),
            Command::Factorize { .. } => "factorize".into(),
        }
    }

    fn output_path(&self) -> Option<&Path> {
        match self {
            Command::Forward { output, .. }
            | Command::Backward { output, .. }
            | Command::Roundtrip { output, .. }
            | Command::Tensor { output, .. }
            | Command::Dsum { output, .. }
            | Command::Shift { output, .. }
            | Command::AutTransfer { output, .. }
            | Command::Catalog { output, .. }
            | Command::Factorize { output, .. } => output.as_deref(),
            Command::Check { .. } | Command::Iso { .. } => None,
        }
    }
}

/// What the binary prints and its exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    cfg: CheckConfig,
    default_field: Field,
}

impl Ctx {
    fn load(&self, path: &Path) -> Result<Loaded, CliError> {
        load_object(path, self.default_field)
    }
}

struct Done {
    field: Field,
    reports: Vec<ReportJson>,
    metadata: Map<String, Value>,
    output: Option<Value>,
    /// Print the output itself instead of a report.
    raw: bool,
}

impl Done {
    fn new(field: Field) -> Done {
        Done { field, reports: Vec::new(), metadata: Map::new(), output: None, raw: false }
    }

    fn report(&mut self, r: &Report) {
        self.reports.push(ReportJson::from_report(&r.render(self.field)));
    }

    fn meta(&mut self, key: &str, value: Value) {
        self.metadata.insert(key.to_string(), value);
    }

    fn conventions(&mut self, lines: &[&str]) {
        self.meta("conventions", json!(lines));
    }
}

fn block<R: Entry>(field: Field, m: &Matrix<R>) -> Result<Value, CliError> {
    Ok(serde_json::to_value(MatrixBlock::from_matrix(field, m)?).expect("matrices serialize"))
}

fn same_field(loaded: &[Loaded]) -> Result<Field, CliError> {
    let first = &loaded[0];
    for l in &loaded[1..] {
        if l.field != first.field {
            return Err(CliError::Usage(format!(
                "{} is over {} but {} is over {}",
                first.source, first.field, l.source, l.field
            )));
        }
    }
    Ok(first.field)
}

fn correspondence(l: &Loaded, cfg: CheckConfig) -> Result<Correspondence, CliError> {
    Ok(if l.is_pair_side() {
        Correspondence::from_object(&l.object()?, cfg)?
    } else {
        Correspondence::from_triple(&l.triple()?, cfg)?
    })
}

const TENSOR_BASIS: &str = "x_i ⊗ y_j has index i·dim(second factor) + j on each side";

fn execute(cmd: &Command, cx: &Ctx) -> Result<Done, CliError> {
    let cfg = cx.cfg;
    match cmd {
        Command::Check { kind, file } => {
            let l = cx.load(file)?;
            let mut d = Done::new(l.field);
            match kind {
                CheckKind::Lie => d.report(&l.lie()?.check_lie_axioms(cfg)),
                CheckKind::Module => {
                    let m = l.module()?;
                    d.report(&l.lie()?.check_lie_axioms(cfg));
                    d.report(&m.check_module(cfg));
                }
                CheckKind::Form => {
                    let f = l.form()?;
                    d.report(&l.lie()?.check_lie_axioms(cfg));
                    d.report(&f.check_form(cfg));
                }
                CheckKind::Gjsp => {
                    let p = l.pair()?;
                    d.report(&p.check_fundamental_identity(cfg));
                    let f = p.classify_flavor();
                    d.meta(
                        "flavor",
                        json!({
                            "antipair": f.antipair,
                            "even": f.even,
                            "jordan_pair": f.jordan_pair,
                            "jordan_superpair": f.jordan_superpair,
                            "odd": f.odd,
                        }),
                    );
                }
                CheckKind::Pairing => {
                    let o = l.object()?;
                    let r = o.check_pairing_properties(cfg).render(l.field);
                    d.reports.push(ReportJson::new(&r, |name| !MEMBERSHIP_PAIRING.contains(&name)));
                    d.conventions(&["right-handed identities are diagnostics and do not affect the status"]);
                }
            }
            Ok(d)
        }
        Command::Forward { file, .. } => {
            let l = cx.load(file)?;
            let o = faulkner_forward_with(&l.triple()?, cfg)?;
            let mut d = Done::new(l.field);
            d.report(&o.check_membership(cfg));
            d.conventions(&[
                "V⁺ = M and V⁻ = M* on the dual basis",
                "{f, v, g} = [f, v]·g and {v, f, w} = [v, f]·w",
                "pairing ⟨f, v⟩ = f(v)",
            ]);
            d.output = Some(ObjectFile::from_object(l.field, &o)?.to_value());
            Ok(d)
        }
        Command::Backward { file, .. } => {
            let l = cx.load(file)?;
            let b = faulkner_backward_with(&l.object()?, cfg)?;
            let mut d = Done::new(l.field);
            d.report(&b.audit);
            let mut r = b.triple.check(cfg);
            r.push(PropertyOutcome::flag("module.faithful", b.triple.is_faithful(), "the representation has a nonzero kernel"));
            d.report(&r);
            d.meta("instr_generators", json!(b.instr.generators()));
            d.conventions(&[
                "L = instr(V); basis element k is ν(f_i, v_j) for the k-th listed generator (i, j)",
                "M = V⁺",
                "b(ν(f, v), ν(g, w)) = ⟨D⁻(f, v) g, w⟩",
            ]);
            d.output = Some(ObjectFile::from_triple(l.field, &b.triple)?.to_value());
            Ok(d)
        }
        Command::Roundtrip { file, .. } => {
            let l = cx.load(file)?;
            let f = l.field;
            let c = correspondence(&l, cfg)?;
            let mut d = Done::new(f);
            d.report(&c.report);
            let intermediate = if l.is_pair_side() {
                d.conventions(&["algebra_map is the identity on instr(V)", "minus_map is Pᵀ: f ↦ ⟨f, ·⟩ identifies V⁻ with the dual of V⁺"]);
                ObjectFile::from_triple(f, &c.triple)?
            } else {
                d.conventions(&["algebra_map sends L to instr(V); columns are instr coordinates", "minus_map identifies V⁻ with M*"]);
                ObjectFile::from_object(f, &c.object)?
            };
            d.output = Some(json!({
                "algebra_map": block(f, &c.algebra_map)?,
                "intermediate": intermediate.to_value(),
                "minus_map": block(f, &c.minus_map)?,
            }));
            Ok(d)
        }
        Command::Tensor { file1, file2, right, .. } => {
            let ls = [cx.load(file1)?, cx.load(file2)?];
            let f = same_field(&ls)?;
            let (a, b) = (ls[0].object()?, ls[1].object()?);
            let t = if *right { gjsp_tensor_right(&a, &b)? } else { gjsp_tensor(&a, &b)? };
            let mut d = Done::new(f);
            d.report(&t.check_membership(cfg));
            if *right {
                d.conventions(&[TENSOR_BASIS, "right product: the left product of the swapped factors moved along x ⊗ y ↦ η(x, y) y ⊗ x"]);
            } else {
                d.conventions(&[TENSOR_BASIS]);
            }
            d.output = Some(ObjectFile::from_object(f, &t)?.to_value());
            Ok(d)
        }
        Command::Dsum { files, .. } => {
            let ls = files.iter().map(|p| cx.load(p)).collect::<Result<Vec<_>, _>>()?;
            let f = same_field(&ls)?;
            let objects = ls.iter().map(Loaded::object).collect::<Result<Vec<GjspObject>, _>>()?;
            let s = gjsp_direct_sum(&objects)?;
            let mut d = Done::new(f);
            d.report(&s.check_membership(cfg));
            d.conventions(&["summands in argument order; products and pairing are block diagonal"]);
            d.output = Some(ObjectFile::from_object(f, &s)?.to_value());
            Ok(d)
        }
        Command::Shift { file, lambda, parity, .. } => {
            let l = cx.load(file)?;
            let o = l.object()?;
            let lambda = l.field.parse(lambda).map_err(|e| CliError::Usage(format!("--lambda {lambda:?}: {e}")))?;
            let alpha = ShiftParameter::new(lambda, Parity::from_bit(*parity)?);
            let t = tensor_shift(&o, &alpha)?;
            let mut d = Done::new(l.field);
            d.report(&t.check_membership(cfg));
            d.report(&verify_tensor_shift(&o, &alpha)?);
            d.meta("shift", json!(alpha.to_string()));
            d.conventions(&["V^[α] lives on the basis of V with parities shifted by the parity of α"]);
            d.output = Some(ObjectFile::from_object(l.field, &t)?.to_value());
            Ok(d)
        }
        Command::Iso { file1, file2, map } => {
            let ls = [cx.load(file1)?, cx.load(file2)?];
            let f = same_field(&ls)?;
            let (a, b) = (&ls[0], &ls[1]);
            let (pa, pb) = (a.pair()?, b.pair()?);
            let m: MapFile = load_aux(map, f, |m: &MapFile| m.field)?;
            let at = map.display().to_string();
            if m.algebra.is_some() {
                return Err(CliError::schema(&at, "an isomorphism of pairs takes minus and plus maps only"));
            }
            let part = |name: &str, blk: &Option<MatrixBlock>, sigma: Sign| -> Result<Matrix, CliError> {
                let blk = blk.as_ref().ok_or_else(|| CliError::schema(&at, format!("missing {name} map")))?;
                blk.to_matrix::<Scalar>(&format!("{at}: {name}"), f, None, (pb.dim(sigma), pa.dim(sigma)))
            };
            let (pm, pp) = (part("minus", &m.minus, Sign::Minus)?, part("plus", &m.plus, Sign::Plus)?);
            let mut d = Done::new(f);
            let forms = match (&a.pairing, &b.pairing) {
                (Some(_), Some(_)) => Some((a.object()?.pairing, b.object()?.pairing)),
                _ => {
                    d.conventions(&["pairings not compared: at least one file has no pairing block"]);
                    None
                }
            };
            d.report(&check_pair_hom(&pm, &pp, pa, pb, forms.as_ref().map(|(x, y)| (x, y)), cfg));
            Ok(d)
        }
        Command::AutTransfer { file, phi, ring, .. } => {
            let l = cx.load(file)?;
            let f = l.field;
            let c = correspondence(&l, cfg)?;
            let m: MapFile = load_aux(phi, f, |m: &MapFile| m.field)?;
            let mut d = Done::new(f);
            d.report(&c.report);
            let at = phi.display().to_string();
            match ring.as_deref() {
                None => transfer::<Scalar>(&c, &m, None, &at, &mut d)?,
                Some(spec) => {
                    let r = parse_ring(spec, f)?;
                    d.meta("ring", json!(spec));
                    transfer::<QuadExt>(&c, &m, Some(&r), &at, &mut d)?
                }
            }
            Ok(d)
        }
        Command::Catalog { name, params, .. } => {
            let f = cx.default_field;
            let file = match by_name(name, params)? {
                CatalogObject::Pair(o) => ObjectFile::from_object(f, &o)?,
                CatalogObject::Triple(t) => ObjectFile::from_triple(f, &t)?,
            };
            let mut d = Done::new(f);
            d.output = Some(file.to_value());
            d.raw = true;
            Ok(d)
        }
        Command::Factorize { file, split, w, .. } => {
            let l = cx.load(file)?;
            let f = l.field;
            let o = l.object()?;
            let dim = o.pair.instr()?.dim();
            let s: SplitFile = load_aux(split, f, |s: &SplitFile| s.field)?;
            let wf: SubspaceFile = load_aux(w, f, |s: &SubspaceFile| s.field)?;
            let (sp, wp) = (split.display().to_string(), w.display().to_string());
            let l1 = vectors(&format!("{sp}: l1"), f, &s.l1, dim)?;
            let l2 = vectors(&format!("{sp}: l2"), f, &s.l2, dim)?;
            let wv = vectors(&format!("{wp}: w"), f, &wf.w, o.pair.dim(Sign::Plus))?;
            let fz = tensor_factorize(&o, &l1, &l2, &wv)?;
            let mut d = Done::new(f);
            d.report(&fz.report);
            d.conventions(&[
                "l1 and l2 are coordinates in the instr(V) basis listed by backward",
                "V ≅ hom_factor ⊗ w_factor; phi_plus sends h ⊗ w to h(w)",
                TENSOR_BASIS,
            ]);
            d.output = Some(json!({
                "hom_factor": ObjectFile::from_object(f, &fz.hom_factor)?.to_value(),
                "phi_minus": block(f, &fz.phi_minus)?,
                "phi_plus": block(f, &fz.phi_plus)?,
                "w_factor": ObjectFile::from_object(f, &fz.w_factor)?.to_value(),
            }));
            Ok(d)
        }
    }
}

fn parse_ring(spec: &str, field: Field) -> Result<Arc<QuadRing>, CliError> {
    if spec == "dual" {
        return Ok(QuadRing::dual_numbers());
    }
    match spec.strip_prefix("quad:") {
        Some(poly) => parse_quadratic(poly, field),
        None => Err(CliError::Usage(format!("unknown ring {spec:?}; expected \"dual\" or \"quad:POLY\""))),
    }
}

fn transfer<R: Entry>(
    c: &Correspondence,
    m: &MapFile,
    ring: Option<&Arc<QuadRing>>,
    at: &str,
    d: &mut Done,
) -> Result<(), CliError> {
    let f = d.field;
    let nm = c.object.pair.dim(Sign::Minus);
    let np = c.object.pair.dim(Sign::Plus);
    let dl = c.triple.algebra().dim();
    let plus = m.plus.as_ref().ok_or_else(|| CliError::schema(at, "missing plus map"))?;
    let plus: Matrix<R> = plus.to_matrix(&format!("{at}: plus"), f, ring, (np, np))?;
    let t = match (&m.minus, &m.algebra) {
        (Some(minus), None) => {
            d.meta("direction", json!("pair-to-module"));
            c.pair_to_module(&minus.to_matrix::<R>(&format!("{at}: minus"), f, ring, (nm, nm))?, &plus)?
        }
        (None, Some(alg)) => {
            d.meta("direction", json!("module-to-pair"));
            c.module_to_pair(&alg.to_matrix::<R>(&format!("{at}: algebra"), f, ring, (dl, dl))?, &plus)?
        }
        _ => {
            return Err(CliError::schema(
                at,
                "give either a minus map (pair to module) or an algebra map (module to pair), not both",
            ))
        }
    };
    d.reports.push(ReportJson::from_report(&t.report.map(|x| x.text(f))));
    d.output = Some(json!({
        "phi0": block(f, &t.phi0)?,
        "phi_minus": block(f, &t.phi_minus)?,
        "phi_plus": block(f, &t.phi_plus)?,
    }));
    Ok(())
}

/// Splits an error into a status and the failed report it carries, if any.
fn classify(e: &CliError, field: Field) -> (Status, Vec<ReportJson>) {
    match e {
        CliError::Core(superpair::Error::NotAutomorphism(r)) => (Status::Fail, vec![ReportJson::from_report(r)]),
        CliError::Core(core) => match core.report() {
            Some(r) => (Status::Fail, vec![ReportJson::from_report(&r.render(field))]),
            None => (Status::InputError, Vec::new()),
        },
        _ => (Status::InputError, Vec::new()),
    }
}

fn default_field() -> Result<Field, CliError> {
    match std::env::var(FIELD_ENV) {
        Ok(s) => parse_field_name(&s).map_err(|e| CliError::Usage(format!("{FIELD_ENV}: {e}"))),
        Err(_) => Ok(Field::Rational),
    }
}

/// Runs one command and renders its report.
pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let cfg = CheckConfig { all_witnesses: cli.all_witnesses };
    let fallback = default_field();
    let field_hint = fallback.as_ref().copied().unwrap_or_default();
    let result = fallback.and_then(|default_field| {
        let cx = Ctx { cfg, default_field };
        match cli.jobs {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("--jobs {n}: {e}")))
                .and_then(|pool| pool.install(|| execute(&cli.command, &cx))),
            None => execute(&cli.command, &cx),
        }
    });
    let mut report = CommandReport {
        command: cli.command.name(),
        status: Status::Pass,
        field: field_hint.to_string(),
        error: None,
        reports: Vec::new(),
        metadata: Map::new(),
        output: None,
        output_file: None,
        timing: None,
    };
    let mut stderr = String::new();
    let mut write_failure = None;
    match result {
        Ok(d) => {
            report.field = d.field.to_string();
            report.status = if d.reports.iter().all(ReportJson::passed) { Status::Pass } else { Status::Fail };
            report.reports = d.reports;
            report.metadata = d.metadata;
            if let (Some(path), Some(o)) = (cli.command.output_path(), &d.output) {
                match std::fs::write(path, canonical_json(o)) {
                    Ok(()) => report.output_file = Some(path.display().to_string()),
                    Err(source) => write_failure = Some(CliError::Io { path: path.display().to_string(), source }),
                }
            } else if d.raw {
                let text = d.output.as_ref().map(canonical_json).unwrap_or_default();
                return Outcome { code: crate::EXIT_PASS, stdout: text, stderr };
            } else {
                report.output = d.output;
            }
        }
        Err(e) => {
            let (status, reports) = classify(&e, field_hint);
            report.status = status;
            report.reports = reports;
            report.error = Some(e.to_string());
            stderr = format!("error: {e}\n");
        }
    }
    if let Some(e) = write_failure {
        report.status = Status::InputError;
        report.error = Some(e.to_string());
        stderr = format!("error: {e}\n");
    }
    if cli.timing {
        report.timing = Some(Timing { elapsed_ms: start.elapsed().as_millis() as u64 });
    }
    let stdout = match cli.report {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Outcome { code: report.status.exit_code(), stdout, stderr }
}
