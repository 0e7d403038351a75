//! Command-line front end.
//!
//! Four subcommands cover the file-level workflow:
//!
//! - `synth`: build a circuit for a target (a 2x2 payload with controls, a
//!   dense unitary, or a named gate), write it to a circuit file, and print
//!   a one-line JSON count report to stdout.
//! - `verify`: re-simulate a circuit file and compare it to a target in one
//!   of three modes (`exact`, `global-phase`, `congruent`); exits 0 iff the
//!   comparison holds at the requested tolerance.
//! - `count`: print the count report of a circuit file; `--expect` checks
//!   the counts against the closed form for a named method.
//! - `demo`: write fixture circuits and matrices into a directory and print
//!   their diagrams.
//!
//! Exit codes: 0 success, 1 failed verification or count mismatch, 2
//! malformed input (unreadable files, bad JSON, missing flags), 3 a target
//! incompatible with the requested method (wrong determinant or form,
//! out-of-range register shape).
//!
//! Reports go to stdout as single-line JSON; everything else (diagnostics,
//! diagrams) goes to stderr or into files, so stdout stays scriptable.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circuit::{reference_controlled, render_ascii, Circuit};
use crate::dense::DenseUnitary;
use crate::format;
use crate::mat2::Unitary2;
use crate::report::SynthesisReport;
use crate::synth;
use crate::verify::{congruent_mod_phases, equal_up_to_global_phase, equal_within, VerifyOutcome};
use crate::Error;

/// Gate-synthesis toolkit: build, verify, and count controlled-gate
/// networks over the one-qubit-plus-XOR basis.
#[derive(Parser)]
#[command(name = "gatesynth", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Synthesize a circuit and write it to a file.
    Synth(SynthArgs),
    /// Check a circuit file against a target unitary.
    Verify(VerifyArgs),
    /// Count the gates of a circuit file by class.
    Count(CountArgs),
    /// Write fixture circuits and print their diagrams.
    Demo(DemoArgs),
}

/// Synthesis method selector. Multi-wire methods take the full register
/// width `--n`; the payload is the gate applied when every control is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// One-control U(2): at most four one-qubit gates and two XORs.
    ControlledU,
    /// One-control determinant-one payload: three one-qubit gates, two XORs.
    CSu2,
    /// One-control phase: a single one-qubit gate (`--delta`).
    CPhase,
    /// One-control symmetric rz-ry-rz payload: two gates, two XORs.
    CAb,
    /// One-control payload with unit diagonal: two gates, one XOR.
    CV,
    /// Two-control U(2): five two-wire gates, or sixteen basic with --expand.
    CcU,
    /// Toffoli up to relative phases: seven gates (`--variant`).
    CongruentToffoli,
    /// Gray-code schedule for an (n-1)-control payload, no spare wires.
    Graycode,
    /// m-control NOT as a Toffoli ladder through spare wires (`--n`, `--m`).
    McxLadder,
    /// (n-2)-control NOT on n wires borrowing one wire; --expand for basic.
    McxSplit,
    /// (n-1)-control payload, quadratic basic-gate count, no spare wires.
    Quadratic,
    /// Approximate (n-1)-control payload within `--eps`.
    Approx,
    /// (n-1)-control determinant-one payload at linear cost.
    Su2Linear,
    /// (n-2)-control payload using one zeroed, restored work wire.
    Ancilla,
    /// Arbitrary dense unitary via two-level rotations (`--input`).
    General,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::ControlledU => "controlled-u",
            Method::CSu2 => "c-su2",
            Method::CPhase => "c-phase",
            Method::CAb => "c-ab",
            Method::CV => "c-v",
            Method::CcU => "cc-u",
            Method::CongruentToffoli => "congruent-toffoli",
            Method::Graycode => "graycode",
            Method::McxLadder => "mcx-ladder",
            Method::McxSplit => "mcx-split",
            Method::Quadratic => "quadratic",
            Method::Approx => "approx",
            Method::Su2Linear => "su2-linear",
            Method::Ancilla => "ancilla",
            Method::General => "general",
        }
    }
}

/// Flags naming the target unitary, shared by `synth` and `verify`.
#[derive(Args)]
struct TargetArgs {
    /// 2x2 payload as a JSON file: {"rows": [[[re, im], ...], ...]}.
    #[arg(long)]
    u: Option<PathBuf>,

    /// Dense unitary as a JSON file: {"n": wires, "rows": [...]} .
    #[arg(long)]
    input: Option<PathBuf>,

    /// Named payload: "toffoli", "toffoli-n" (with --n), or "deutsch"
    /// (with --theta).
    #[arg(long)]
    target: Option<String>,

    /// Rotation angle for the "deutsch" named target.
    #[arg(long)]
    theta: Option<f64>,

    /// Total register width for multi-wire methods.
    #[arg(long)]
    n: Option<usize>,

    /// Control count (alternative to --n: the register is one wire wider,
    /// or two for the ancilla method).
    #[arg(long)]
    controls: Option<usize>,
}

#[derive(Args)]
struct SynthArgs {
    /// Synthesis method.
    #[arg(long, value_enum)]
    method: Method,

    #[command(flatten)]
    target: TargetArgs,

    /// Ladder control count (mcx-ladder only).
    #[arg(long)]
    m: Option<usize>,

    /// Operator-norm error budget (approx only).
    #[arg(long)]
    eps: Option<f64>,

    /// Phase angle (c-phase only).
    #[arg(long)]
    delta: Option<f64>,

    /// Congruent-Toffoli variant: "quarter" or "three-quarter".
    #[arg(long)]
    variant: Option<String>,

    /// Gray-code crossover width for the quadratic recursion.
    #[arg(long)]
    crossover: Option<usize>,

    /// Expand to basic gates (cc-u, graycode, mcx-split).
    #[arg(long)]
    expand: bool,

    /// Skip the final merge pass, keeping the raw construction.
    #[arg(long)]
    no_merge: bool,

    /// Output circuit file.
    #[arg(long, default_value = "circuit.txt")]
    out: PathBuf,
}

/// Comparison modes for `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Operator-norm distance.
    Exact,
    /// Distance after the best single global phase.
    GlobalPhase,
    /// Distance after the best per-column sign pattern.
    Congruent,
}

#[derive(Args)]
struct VerifyArgs {
    /// Circuit file to check.
    #[arg(long)]
    circuit: PathBuf,

    /// Comparison mode.
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,

    /// Tolerance on the distance.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,

    #[command(flatten)]
    target: TargetArgs,
}

/// Closed-form count checks available to `count --expect`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpectMethod {
    /// 3 controlled-V + 2 XOR, or 8 one-qubit + 8 XOR with --expand.
    CcU,
    /// 2^m - 1 controlled-V + 2^m - 2 XOR; expanded 2^{m+1} + (3·2^m - 4).
    Graycode,
    /// 4(m - 2) Toffolis (requires --m).
    McxLadder,
    /// 8(n - 5) Toffolis; expanded 48n - 204 basic gates.
    McxSplit,
}

#[derive(Args)]
struct CountArgs {
    /// Circuit file to count.
    #[arg(long)]
    circuit: PathBuf,

    /// Compare the counts against the closed form for a method.
    #[arg(long, value_enum)]
    expect: Option<ExpectMethod>,

    /// Ladder control count (--expect mcx-ladder).
    #[arg(long)]
    m: Option<usize>,

    /// The circuit is a basic-gate expansion.
    #[arg(long)]
    expand: bool,
}

#[derive(Args)]
struct DemoArgs {
    /// Directory for the fixture files.
    #[arg(long, default_value = "demo")]
    out: PathBuf,
}

/// CLI failures: usage problems exit 2; library errors map by kind.
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(e) => match e {
                // The target cannot be handled by the chosen method.
                Error::NotSpecialUnitary(_)
                | Error::FormMismatch(_)
                | Error::ParamRange(_)
                | Error::SimTooLarge(_) => 3,
                // Everything else is malformed input of some kind.
                _ => 2,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Entry point: parses arguments, runs the subcommand, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Synth(a) => cmd_synth(&a),
        Cmd::Verify(a) => cmd_verify(&a),
        Cmd::Count(a) => cmd_count(&a),
        Cmd::Demo(a) => cmd_demo(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Lib(Error::Io(e)))
}

impl TargetArgs {
    /// Resolves the 2x2 payload from `--u` or `--target`.
    fn payload(&self) -> Result<Unitary2, CliError> {
        match (&self.u, &self.target) {
            (Some(_), Some(_)) => Err(usage("give either --u or --target, not both")),
            (Some(path), None) => Ok(format::unitary2_from_json(&read_file(path)?)?),
            (None, Some(name)) => match name.as_str() {
                "toffoli" | "toffoli-n" => Ok(Unitary2::pauli_x()),
                "deutsch" => {
                    let theta =
                        self.theta.ok_or_else(|| usage("the deutsch target needs --theta"))?;
                    Ok(Unitary2::deutsch(theta))
                }
                other => Err(usage(format!(
                    "unknown target {other:?} (expected toffoli, toffoli-n, or deutsch)"
                ))),
            },
            (None, None) => Err(usage("this method needs a payload: --u or --target")),
        }
    }

    /// Register width from `--n` or `--controls`; `extra` is the number of
    /// non-control wires (1 for a payload target, 2 for the ancilla method).
    fn width(&self, extra: usize) -> Result<usize, CliError> {
        match (self.n, self.controls) {
            (Some(n), None) => Ok(n),
            (None, Some(m)) => Ok(m + extra),
            (Some(n), Some(m)) if m + extra == n => Ok(n),
            (Some(_), Some(_)) => Err(usage("--n and --controls disagree")),
            (None, None) => {
                // Named fixed-shape targets imply their width.
                match self.target.as_deref() {
                    Some("toffoli") | Some("deutsch") => Ok(3),
                    _ => Err(usage("this method needs a register width: --n or --controls")),
                }
            }
        }
    }
}

fn parse_variant(s: Option<&str>) -> Result<synth::CongruentVariant, CliError> {
    match s {
        Some("quarter") => Ok(synth::CongruentVariant::RyQuarter),
        Some("three-quarter") => Ok(synth::CongruentVariant::RyThreeQuarter),
        Some(other) => {
            Err(usage(format!("unknown variant {other:?} (quarter or three-quarter)")))
        }
        None => Err(usage("congruent-toffoli needs --variant quarter|three-quarter")),
    }
}

fn cmd_synth(a: &SynthArgs) -> Result<i32, CliError> {
    let mut achieved: Option<f64> = None;
    let c: Circuit = match a.method {
        Method::ControlledU => {
            let u = a.target.payload()?;
            if a.no_merge {
                let parts = crate::synth::two_bit::c_u_parts(&u);
                let mut c = Circuit::new(2);
                for g in crate::synth::two_bit::c_u_gates(0, 1, &parts) {
                    c.push(g);
                }
                c
            } else {
                synth::synth_c_u(&u)
            }
        }
        Method::CSu2 => synth::synth_c_su2(&a.target.payload()?)?,
        Method::CPhase => {
            let delta = a.delta.ok_or_else(|| usage("c-phase needs --delta"))?;
            synth::synth_c_phase(delta)
        }
        Method::CAb => synth::synth_c_ab(&a.target.payload()?)?,
        Method::CV => synth::synth_c_v(&a.target.payload()?)?,
        Method::CcU => {
            let u = a.target.payload()?;
            match (a.expand, a.no_merge) {
                (false, _) => synth::synth_cc_u(&u),
                (true, false) => synth::expand_cc_u(&u),
                (true, true) => crate::synth::three_bit::expand_cc_u_raw(&u),
            }
        }
        Method::CongruentToffoli => {
            let (c, signs) = synth::synth_congruent_toffoli(parse_variant(a.variant.as_deref())?);
            eprintln!("congruent modulo column signs {signs:?}");
            c
        }
        Method::Graycode => {
            let u = a.target.payload()?;
            let m = a.target.width(1)?.saturating_sub(1);
            match (a.expand, a.no_merge) {
                (false, _) => synth::synth_graycode(m, &u)?,
                (true, false) => synth::expand_graycode(m, &u)?,
                (true, true) => crate::synth::multi::expand_graycode_raw(m, &u)?,
            }
        }
        Method::McxLadder => {
            let n = a.target.width(1)?;
            let m = a.m.ok_or_else(|| usage("mcx-ladder needs --m (control count)"))?;
            synth::synth_mcx_ladder(n, m)?
        }
        Method::McxSplit => {
            let n = a.target.width(2)?;
            match (a.expand, a.no_merge) {
                (false, _) => synth::synth_mcx_split(n)?,
                (true, false) => synth::expand_mcx_split(n)?,
                (true, true) => crate::synth::mcx::expand_mcx_split_raw(n)?,
            }
        }
        Method::Quadratic => {
            let u = a.target.payload()?;
            let n = a.target.width(1)?;
            let crossover = a.crossover.unwrap_or(synth::DEFAULT_CROSSOVER);
            if a.no_merge {
                crate::synth::multi::quadratic_raw(n, &u, crossover)?
            } else {
                synth::synth_mcu_quadratic_with_crossover(n, &u, crossover)?
            }
        }
        Method::Approx => {
            let u = a.target.payload()?;
            let n = a.target.width(1)?;
            let eps = a.eps.ok_or_else(|| usage("approx needs --eps"))?;
            achieved = Some(synth::approx_error_bound(n, &u, eps)?);
            if a.no_merge {
                crate::synth::multi::approx_raw(n, &u, eps)?
            } else {
                synth::synth_mcu_approx(n, &u, eps)?
            }
        }
        Method::Su2Linear => {
            let u = a.target.payload()?;
            let n = a.target.width(1)?;
            if a.no_merge {
                crate::synth::multi::su2_linear_raw(n, &u)?
            } else {
                synth::synth_mcsu2_linear(n, &u)?
            }
        }
        Method::Ancilla => {
            let u = a.target.payload()?;
            let n = a.target.width(2)?;
            if a.no_merge {
                crate::synth::multi::ancilla_raw(n, &u)?
            } else {
                synth::synth_mcu_ancilla(n, &u)?
            }
        }
        Method::General => {
            let path =
                a.target.input.as_ref().ok_or_else(|| usage("general needs --input <json>"))?;
            let dense = format::dense_from_json(&read_file(path)?)?;
            if a.no_merge {
                crate::synth::general::unitary_raw(&dense)?
            } else {
                synth::synth_unitary(&dense)?.0
            }
        }
    };

    let mut report = SynthesisReport::for_method(&c, a.method.name());
    report.achieved_distance = achieved;
    std::fs::write(&a.out, format::write_circuit(&c)).map_err(Error::Io)?;
    eprintln!("wrote {} ({} wires, {} gates)", a.out.display(), c.num_wires, c.gates.len());
    println!("{}", report.to_json());
    Ok(0)
}

/// Builds the reference unitary for `verify` from the target flags.
fn reference(t: &TargetArgs, circuit_wires: usize) -> Result<DenseUnitary, CliError> {
    if let Some(path) = &t.input {
        return Ok(format::dense_from_json(&read_file(path)?)?);
    }
    let u = t.payload()?;
    let m = match t.controls {
        Some(m) => m,
        None => circuit_wires.saturating_sub(1),
    };
    Ok(reference_controlled(m, &u)?)
}

fn cmd_verify(a: &VerifyArgs) -> Result<i32, CliError> {
    let c = format::parse_circuit(&read_file(&a.circuit)?)?;
    let sim = c.simulate()?;
    let target = reference(&a.target, c.num_wires)?;
    if sim.dim() != target.dim() {
        return Err(CliError::Lib(Error::DimMismatch(sim.dim(), target.dim())));
    }
    // Run the comparison unbounded, then apply the tolerance here so a
    // failure still reports the distance it reached.
    let out: VerifyOutcome = match a.mode {
        Mode::Exact => equal_within(&sim, &target, f64::INFINITY)?,
        Mode::GlobalPhase => equal_up_to_global_phase(&sim, &target, f64::INFINITY)?,
        Mode::Congruent => congruent_mod_phases(&sim, &target, f64::INFINITY)?,
    };
    let pass = out.distance <= a.tol;
    let mut line = serde_json::json!({
        "mode": match a.mode {
            Mode::Exact => "exact",
            Mode::GlobalPhase => "global-phase",
            Mode::Congruent => "congruent",
        },
        "distance": out.distance,
        "tolerance": a.tol,
        "pass": pass,
    });
    if let Some(p) = out.phase {
        line["phase"] = serde_json::json!(p);
    }
    if let Some(s) = &out.signs {
        line["signs"] = serde_json::json!(s);
    }
    println!("{line}");
    Ok(if pass { 0 } else { 1 })
}

/// One closed-form expectation: a labelled gate-class count.
struct Expectation {
    label: &'static str,
    actual: usize,
    expected: usize,
}

fn count_expectations(
    which: ExpectMethod,
    expand: bool,
    m_flag: Option<usize>,
    r: &SynthesisReport,
) -> Result<Vec<Expectation>, CliError> {
    let n = r.num_wires;
    match which {
        ExpectMethod::CcU => {
            if expand {
                Ok(vec![
                    Expectation { label: "one_qubit", actual: r.one_qubit, expected: 8 },
                    Expectation { label: "xor", actual: r.xor, expected: 8 },
                ])
            } else {
                Ok(vec![
                    Expectation { label: "controlled_v", actual: r.controlled_v, expected: 3 },
                    Expectation { label: "xor", actual: r.xor, expected: 2 },
                ])
            }
        }
        ExpectMethod::Graycode => {
            let m = n - 1;
            if expand {
                Ok(vec![
                    Expectation { label: "one_qubit", actual: r.one_qubit, expected: 1 << (m + 1) },
                    Expectation { label: "xor", actual: r.xor, expected: 3 * (1 << m) - 4 },
                ])
            } else {
                Ok(vec![
                    Expectation {
                        label: "controlled_v",
                        actual: r.controlled_v,
                        expected: (1 << m) - 1,
                    },
                    Expectation { label: "xor", actual: r.xor, expected: (1 << m) - 2 },
                ])
            }
        }
        ExpectMethod::McxLadder => {
            let m = m_flag.ok_or_else(|| usage("--expect mcx-ladder needs --m"))?;
            Ok(vec![Expectation { label: "toffoli", actual: r.toffoli, expected: 4 * (m - 2) }])
        }
        ExpectMethod::McxSplit => {
            if expand {
                Ok(vec![Expectation {
                    label: "total_basic",
                    actual: r.total_basic,
                    expected: 48 * n - 204,
                }])
            } else {
                Ok(vec![Expectation { label: "toffoli", actual: r.toffoli, expected: 8 * (n - 5) }])
            }
        }
    }
}

fn cmd_count(a: &CountArgs) -> Result<i32, CliError> {
    let c = format::parse_circuit(&read_file(&a.circuit)?)?;
    let r = crate::report::count_basic(&c);
    println!("{}", r.to_json());
    if let Some(which) = a.expect {
        let checks = count_expectations(which, a.expand, a.m, &r)?;
        let mut ok = true;
        for e in &checks {
            if e.actual == e.expected {
                eprintln!("{}: {} as expected", e.label, e.actual);
            } else {
                eprintln!("{}: expected {}, found {}", e.label, e.expected, e.actual);
                ok = false;
            }
        }
        if !ok {
            return Ok(1);
        }
    }
    Ok(0)
}

fn cmd_demo(a: &DemoArgs) -> Result<i32, CliError> {
    std::fs::create_dir_all(&a.out).map_err(Error::Io)?;
    let x = Unitary2::pauli_x();

    let mut fixtures: Vec<(&str, Circuit)> = Vec::new();
    fixtures.push(("toffoli-coarse.txt", synth::synth_cc_u(&x)));
    fixtures.push(("toffoli-basic.txt", synth::expand_cc_u(&x)));
    let (congruent, signs) = synth::synth_congruent_toffoli(synth::CongruentVariant::RyQuarter);
    fixtures.push(("toffoli-congruent.txt", congruent));
    fixtures.push(("deutsch-basic.txt", synth::expand_cc_u(&Unitary2::deutsch(1.5))));
    fixtures.push(("mcx-graycode-m3.txt", synth::expand_graycode(3, &x)?));
    fixtures.push(("mcx-split-n7.txt", synth::expand_mcx_split(7)?));

    std::fs::write(a.out.join("deutsch.json"), format::unitary2_to_json(&Unitary2::deutsch(1.5)))
        .map_err(Error::Io)?;
    eprintln!("toffoli-congruent.txt is congruent modulo column signs {signs:?}");

    for (name, c) in &fixtures {
        let path = a.out.join(name);
        std::fs::write(&path, format::write_circuit(c)).map_err(Error::Io)?;
        println!("{name} ({} wires, {} gates)", c.num_wires, c.gates.len());
        if c.num_wires <= 3 {
            println!("{}", render_ascii(c));
        }
    }
    Ok(0)
}
