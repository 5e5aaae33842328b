//! Command-line surface and dispatch.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use critline_core::combinators::CounterexampleSpec;
use critline_core::counting::{bifurcation_bracket, count_compare, winding_count, y_star_scan, CountFn};
use critline_core::critline::{
    interlacing_check, line_zeros, ordinates, positional_experiment, translation_scan, FunctionId, PositionalMode,
    ZeroRecord, ZeroTables,
};
use critline_core::planar::{
    check_propositions, derivative_zeros_tall, extract_contours, factor_derivative_zero, grid_eval, FieldFn, Modulus,
    Window,
};
use critline_core::ComplexValue;
use serde_json::{json, Value};

use crate::cache::{write_atomic, CacheStatus, TableCache};
use crate::config::{parse_complex, ConfigFile, Layers};
use crate::error::{CliError, Result};
use crate::figures::{self, FigureInput};
use crate::functions::{PointFn, DEFAULT_DELTA, DEFAULT_T_STAR};
use crate::report;
use crate::table::{render_table, TableHeader};

/// Largest table height the zero tables support.
pub const TABLE_T_MAX: f64 = 1000.0;

#[derive(Debug, Parser)]
#[command(name = "critline", version, about = "Critical-line combinations of the completed zeta function")]
pub struct Cli {
    /// `key = value` settings file; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Zero-table cache (default: $CRITLINE_CACHE, then ./cache).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Artifact path (a directory for `figure`); standard output when omitted.
    #[arg(long, short, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[arg(long = "fn")]
        function: Option<String>,
        /// Point as `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// `y` for a0 and f, `T` for I.
        #[arg(long)]
        param: Option<f64>,
        #[command(flatten)]
        oa: OaArgs,
    },
    /// Critical-line zero table (CSV) of Tplus, Tminus or zeta_line.
    Zeros {
        #[arg(long = "fn")]
        function: Option<String>,
        #[arg(long)]
        tmax: Option<f64>,
    },
    /// Positional, translation and interlacing experiments on the tables to t = 1000.
    Experiment {
        #[command(subcommand)]
        kind: Experiment,
    },
    /// Zeros of U' (equivalently V', W') in a window.
    DerivZeros {
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        oa: OaArgs,
    },
    /// Contours |V| = level or |W| = level.
    Contours {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long)]
        level: Option<f64>,
        #[arg(long, value_enum)]
        modulus: Option<ModulusArg>,
        /// Grid spacing.
        #[arg(long)]
        cell: Option<f64>,
        #[command(flatten)]
        oa: OaArgs,
    },
    /// Verdicts for Propositions 2, 3 and 4 in a window.
    Propositions {
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        oa: OaArgs,
    },
    /// Loop, quadrant and derivative-zero topology in a window.
    Topology {
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        oa: OaArgs,
    },
    /// Zero count up to T against its main term, or a winding census of a rectangle.
    Count {
        #[arg(long = "fn", value_enum)]
        function: Option<CountArg>,
        #[arg(long = "T", alias = "t")]
        t: Option<f64>,
        /// `y` for a0.
        #[arg(long)]
        y: Option<f64>,
        /// Winding census over this rectangle instead of a count to T.
        #[arg(long, allow_hyphen_values = true)]
        rect: Option<WindowArg>,
    },
    /// Real zeros of a0(y, σ) in (0, 1), or a bracket of the onset threshold.
    Ystar {
        #[arg(long)]
        y: Option<f64>,
        /// Bisect the onset between `lo,hi`.
        #[arg(long)]
        bracket: Option<String>,
    },
    /// The off-axis example: derivative zeros, the F' zero shift and proposition verdicts.
    Counterexample {
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        t_star: Option<f64>,
        /// Window (default σ ∈ [-0.25, 1.25], t* ± 1).
        #[arg(long, allow_hyphen_values = true)]
        window: Option<WindowArg>,
    },
    /// Regenerate the data (JSON) and SVG for figure 1 to 6.
    Figure {
        n: u8,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<WindowArg>,
        /// Grid spacing.
        #[arg(long)]
        cell: Option<f64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Experiment {
    Positional {
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t0: Option<f64>,
    },
    Translation {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        lo: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<f64>,
        #[arg(long)]
        step: Option<f64>,
    },
    Interlacing,
}

#[derive(Debug, Args)]
pub struct WindowArgs {
    /// `σ_lo,σ_hi,t_lo,t_hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<WindowArg>,
}

#[derive(Debug, Args)]
pub struct OaArgs {
    /// Use the off-axis variant (default δ = 0.05, t* = 418.85).
    #[arg(long)]
    pub oa: bool,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub t_star: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModulusArg {
    V,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    AfterTplus,
    BetweenTminus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountArg {
    #[value(name = "Tplus")]
    Tplus,
    #[value(name = "Tminus")]
    Tminus,
    #[value(name = "xi1_2s")]
    Xi1TwoS,
    #[value(name = "a0")]
    A0,
    #[value(name = "U")]
    U,
    #[value(name = "V")]
    V,
    #[value(name = "W")]
    W,
}

macro_rules! text_enum {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let v = self.to_possible_value().expect("no skipped variants");
                f.write_str(v.get_name())
            }
        }
        impl FromStr for $t {
            type Err = String;
            fn from_str(s: &str) -> std::result::Result<Self, String> {
                <$t as ValueEnum>::from_str(s, false)
            }
        }
    };
}
text_enum!(ModulusArg);
text_enum!(ModeArg);
text_enum!(CountArg);

/// A window given as `σ_lo,σ_hi,t_lo,t_hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowArg(pub Window);

impl FromStr for WindowArg {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let v: Vec<f64> = s
            .split(',')
            .map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}")))
            .collect::<std::result::Result<_, _>>()?;
        let [a, b, c, d] = v[..] else { return Err(format!("`{s}`: expected σ_lo,σ_hi,t_lo,t_hi")) };
        Window::new(a, b, c, d).map(WindowArg).map_err(|e| e.to_string())
    }
}

impl fmt::Display for WindowArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.0;
        write!(f, "{},{},{},{}", w.sigma_lo, w.sigma_hi, w.t_lo, w.t_hi)
    }
}

/// What a command produced.
#[derive(Debug, PartialEq)]
pub enum Output {
    /// Text for standard output.
    Text(String),
    /// Files written.
    Files(Vec<PathBuf>),
}

pub struct Session {
    layers: Layers,
    cache: TableCache,
    out: Option<PathBuf>,
}

impl Session {
    pub fn new(cli_config: Option<&Path>, cache_dir: Option<PathBuf>, out: Option<PathBuf>) -> Result<Self> {
        let file = match cli_config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        Self::with_layers(Layers::from_env(file), cache_dir, out)
    }

    pub fn with_layers(mut layers: Layers, cache_dir: Option<PathBuf>, out: Option<PathBuf>) -> Result<Self> {
        let cache = TableCache::new(layers.cache_dir(cache_dir));
        let out = layers.opt::<String>("out", out.map(|p| p.display().to_string()))?.map(PathBuf::from);
        // the output location does not change what is written
        layers.forget("out");
        Ok(Self { layers, cache, out })
    }

    pub fn cache(&self) -> &TableCache {
        &self.cache
    }

    pub fn table(&self, function: FunctionId, t_max: f64) -> Result<(CacheStatus, Vec<ZeroRecord>)> {
        self.cache.get_or_compute(function, t_max, || line_zeros(function, t_max))
    }

    fn tables(&self) -> Result<(Vec<ZeroRecord>, Vec<ZeroRecord>, Vec<ZeroRecord>)> {
        let (_, p) = self.table(FunctionId::Tplus, TABLE_T_MAX)?;
        let (_, m) = self.table(FunctionId::Tminus, TABLE_T_MAX)?;
        let (_, z) = self.table(FunctionId::ZetaLine, TABLE_T_MAX)?;
        Ok((p, m, z))
    }

    fn spec(&mut self, oa: &OaArgs) -> Result<Option<CounterexampleSpec>> {
        let on = self.layers.get("oa", oa.oa.then_some(true), false)? || oa.delta.is_some() || oa.t_star.is_some();
        if !on {
            return Ok(None);
        }
        let delta = self.layers.get("delta", oa.delta, DEFAULT_DELTA)?;
        let t_star = self.layers.get("t_star", oa.t_star, DEFAULT_T_STAR)?;
        validate(CounterexampleSpec::new(delta, t_star, Vec::new()), "delta").map(Some)
    }

    fn window(&mut self, w: &WindowArgs) -> Result<Window> {
        let w = self.layers.require::<WindowArg>("window", w.window)?.0;
        validate(w.check_domain(), "window")?;
        Ok(w)
    }

    /// Emit a JSON document to `--out` or standard output.
    fn json(&self, kind: &str, body: Value) -> Result<Output> {
        let doc = report::document(kind, &self.layers.hash(), body);
        self.emit(doc)
    }

    fn emit(&self, text: String) -> Result<Output> {
        match &self.out {
            Some(p) => {
                write_atomic(p, text.as_bytes())?;
                Ok(Output::Files(vec![p.clone()]))
            }
            None => Ok(Output::Text(text)),
        }
    }

    pub fn run(&mut self, command: &Command) -> Result<Output> {
        match command {
            Command::Eval { function, s, param, oa } => self.eval(function.clone(), s.clone(), *param, oa),
            Command::Zeros { function, tmax } => self.zeros(function.clone(), *tmax),
            Command::Experiment { kind } => self.experiment(kind),
            Command::DerivZeros { window, oa } => {
                self.layers.record("command", "deriv-zeros");
                let w = self.window(window)?;
                let spec = self.spec(oa)?;
                let zeros = derivative_zeros_tall(w, spec.as_ref())?;
                let list: Vec<Value> = zeros
                    .iter()
                    .map(|z| json!({
                        "location": report::complex(z.location),
                        "abs_v": z.abs_v,
                        "residual": z.residual,
                        "quadrant": z.quadrant.map(|q| q.label()),
                    }))
                    .collect();
                self.json("derivative_zeros", json!({ "window": report::window(&w), "zeros": list }))
            }
            Command::Contours { window, level, modulus, cell, oa } => {
                self.layers.record("command", "contours");
                let w = self.window(window)?;
                let level = self.layers.get("level", *level, 1.0)?;
                let m = self.layers.get("modulus", *modulus, ModulusArg::V)?;
                let cell = positive(self.layers.get("cell", *cell, 0.01)?, "cell")?;
                let spec = self.spec(oa)?;
                let nx = ((w.width() / cell).round() as usize + 1).max(16);
                let ny = ((w.height() / cell).round() as usize + 1).max(16);
                let field = grid_eval(w, nx, ny, FieldFn::W, spec.as_ref())?;
                let modulus = if m == ModulusArg::V { Modulus::AbsV } else { Modulus::AbsW };
                let cs = extract_contours(&field, level, modulus)?;
                self.json(
                    "contours",
                    json!({
                        "window": report::window(&w),
                        "grid": [nx, ny],
                        "contours": cs.iter().map(report::contour).collect::<Vec<_>>(),
                    }),
                )
            }
            Command::Propositions { window, oa } => {
                self.layers.record("command", "propositions");
                let w = self.window(window)?;
                let spec = self.spec(oa)?;
                let r = check_propositions(w, spec.as_ref())?;
                self.json("propositions", report::propositions(&r))
            }
            Command::Topology { window, oa } => {
                self.layers.record("command", "topology");
                let w = self.window(window)?;
                let spec = self.spec(oa)?;
                let r = critline_core::planar::topology_report(w, spec.as_ref())?;
                self.json("topology", report::topology(&r))
            }
            Command::Count { function, t, y, rect } => self.count(*function, *t, *y, *rect),
            Command::Ystar { y, bracket } => {
                self.layers.record("command", "ystar");
                match self.layers.opt::<String>("bracket", bracket.clone())? {
                    Some(b) => {
                        let (lo, hi) = parse_pair(&b, "bracket")?;
                        let (a, b) = bifurcation_bracket(lo, hi, 1e-4)?;
                        self.json("ystar_bracket", json!({ "bracket": [a, b], "y_star": critline_core::counting::Y_STAR }))
                    }
                    None => {
                        let y = self.layers.require("y", *y)?;
                        let zeros = y_star_scan(y)?;
                        self.json("ystar", json!({ "y": y, "zeros": zeros }))
                    }
                }
            }
            Command::Counterexample { delta, t_star, window } => self.counterexample(*delta, *t_star, *window),
            Command::Figure { n, window, cell } => self.figure(*n, *window, *cell),
        }
    }

    fn eval(&mut self, function: Option<String>, s: Option<String>, param: Option<f64>, oa: &OaArgs) -> Result<Output> {
        let name = self.layers.require::<String>("fn", function)?;
        let raw = self.layers.require::<String>("s", s)?;
        let s = parse_complex(&raw).map_err(|e| CliError::config("s", e))?;
        let param = self.layers.opt("param", param)?;
        let spec = self.spec(oa)?;
        let r = PointFn::parse(&name, param, spec.as_ref())?.eval(s);
        let line = if r.at_pole { "pole".to_string() } else { format_complex(r.value) };
        Ok(Output::Text(format!("{line}\n")))
    }

    fn zeros(&mut self, function: Option<String>, tmax: Option<f64>) -> Result<Output> {
        let name = self.layers.require::<String>("fn", function)?;
        let f = FunctionId::from_name(&name)
            .filter(|f| matches!(f, FunctionId::Tplus | FunctionId::Tminus | FunctionId::ZetaLine))
            .ok_or_else(|| CliError::config("fn", format!("`{name}`: tables exist for Tplus, Tminus and zeta_line")))?;
        let tmax = self.layers.require::<f64>("tmax", tmax)?;
        if !(tmax > 0.0 && tmax <= TABLE_T_MAX) {
            return Err(CliError::config("tmax", format!("{tmax} outside (0, {TABLE_T_MAX}]")));
        }
        let (_, records) = self.table(f, tmax)?;
        self.emit(render_table(&TableHeader::new(f, tmax, critline_core::CODE_VERSION), &records))
    }

    fn experiment(&mut self, kind: &Experiment) -> Result<Output> {
        let (p, m, z) = self.tables()?;
        let tables = ZeroTables { tplus: &p, tminus: &m, zeta_line: &z };
        match kind {
            Experiment::Positional { mode, n, t0 } => {
                self.layers.record("command", "experiment positional");
                let mode = self.layers.get("mode", *mode, ModeArg::AfterTplus)?;
                let n = self.layers.get("n", *n, 1500)?;
                let t0 = self.layers.get("t0", *t0, 0.0)?;
                let mode = match mode {
                    ModeArg::AfterTplus => PositionalMode::AfterTplus,
                    ModeArg::BetweenTminus => PositionalMode::BetweenTminus,
                };
                let r = positional_experiment(n, mode, t0, tables)?;
                self.json("positional", report::positional(&r))
            }
            Experiment::Translation { n, lo, hi, step } => {
                self.layers.record("command", "experiment translation");
                let n = self.layers.get("n", *n, 1500)?;
                let lo = self.layers.get("lo", *lo, -0.12)?;
                let hi = self.layers.get("hi", *hi, 0.0)?;
                let step = positive(self.layers.get("step", *step, 0.002)?, "step")?;
                if !(lo < hi) {
                    return Err(CliError::config("lo", "must be below hi"));
                }
                let k = ((hi - lo) / step).round() as usize;
                let grid: Vec<f64> = (0..=k).map(|i| lo + step * i as f64).collect();
                let band = translation_scan(n, &grid, tables)?;
                self.json("translation", json!({ "n": n, "grid": [lo, hi, step], "feasible": band.map(|(a, b)| [a, b]) }))
            }
            Experiment::Interlacing => {
                self.layers.record("command", "experiment interlacing");
                let v = interlacing_check(&p, &m);
                self.json("interlacing", json!({ "t_max": TABLE_T_MAX, "violations": report::violations(&v) }))
            }
        }
    }

    fn count(&mut self, function: Option<CountArg>, t: Option<f64>, y: Option<f64>, rect: Option<WindowArg>) -> Result<Output> {
        self.layers.record("command", "count");
        let f = self.layers.require("fn", function)?;
        let cf = match f {
            CountArg::Tplus => CountFn::Tplus,
            CountArg::Tminus => CountFn::Tminus,
            CountArg::Xi1TwoS => CountFn::Xi1TwoS,
            CountArg::A0 => CountFn::A0 { y: self.layers.get("y", y, 2.0)? },
            CountArg::U => CountFn::U,
            CountArg::V => CountFn::V,
            CountArg::W => CountFn::W,
        };
        if let Some(r) = self.layers.opt::<WindowArg>("rect", rect)? {
            let rep = winding_count(cf, r.0, None)?;
            return self.json("winding", report::count(&rep));
        }
        let t = self.layers.require::<f64>("T", t)?;
        let table = match cf {
            CountFn::Tplus | CountFn::Tminus | CountFn::Xi1TwoS if t <= TABLE_T_MAX => {
                let fid = match cf {
                    CountFn::Tplus => FunctionId::Tplus,
                    CountFn::Tminus => FunctionId::Tminus,
                    _ => FunctionId::ZetaLine,
                };
                Some(ordinates(&self.table(fid, TABLE_T_MAX)?.1))
            }
            _ => None,
        };
        let rep = count_compare(cf, t, table.as_deref())?;
        let mut body = report::count(&rep);
        body["bound"] = json!(critline_core::counting::deviation_bound(t));
        self.json("count", body)
    }

    fn counterexample(&mut self, delta: Option<f64>, t_star: Option<f64>, window: Option<WindowArg>) -> Result<Output> {
        self.layers.record("command", "counterexample");
        let delta = self.layers.get("delta", delta, DEFAULT_DELTA)?;
        let t_star = self.layers.get("t_star", t_star, DEFAULT_T_STAR)?;
        let spec = validate(CounterexampleSpec::new(delta, t_star, Vec::new()), "delta")?;
        let w = match self.layers.opt::<WindowArg>("window", window)? {
            Some(w) => w.0,
            None => Window::new(-0.25, 1.25, t_star - 1.0, t_star + 1.0)?,
        };
        validate(w.check_domain(), "window")?;
        let dz = derivative_zeros_tall(w, Some(&spec))?;
        let fz = factor_derivative_zero(&spec, ComplexValue::new(0.75 - 2.0 * delta * delta, t_star))?;
        let props = check_propositions(w, Some(&spec))?;
        self.json(
            "counterexample",
            json!({
                "delta": delta,
                "t_star": t_star,
                "window": report::window(&w),
                "derivative_zeros": dz.iter().map(|z| json!({ "location": report::complex(z.location), "abs_v": z.abs_v })).collect::<Vec<_>>(),
                "factor_derivative_zero": report::complex(fz),
                "factor_shift": fz.re - 0.75,
                "propositions": report::propositions(&props),
            }),
        )
    }

    fn figure(&mut self, n: u8, window: Option<WindowArg>, cell: Option<f64>) -> Result<Output> {
        self.layers.record("command", format!("figure {n}"));
        let window = self.layers.opt::<WindowArg>("window", window)?.map(|w| w.0);
        let cell = positive(self.layers.get("cell", cell, 0.005)?, "cell")?;
        let t_hi = window.map_or(figures::default_window(n)?.t_hi, |w| w.t_hi);
        let zeta = if t_hi <= TABLE_T_MAX { ordinates(&self.table(FunctionId::ZetaLine, TABLE_T_MAX)?.1) } else { Vec::new() };
        let header = format!("critline figure {n}; code_version {}; config_hash {}", critline_core::CODE_VERSION, self.layers.hash());
        let fig = figures::render(n, &FigureInput { zeta_line: &zeta, cell, window, header: &header })?;
        let dir = self.out.clone().unwrap_or_else(|| PathBuf::from("."));
        fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        let svg_path = dir.join(format!("figure{n}.svg"));
        let json_path = dir.join(format!("figure{n}.json"));
        let data = report::document("figure", &self.layers.hash(), fig.data);
        write_atomic(&svg_path, fig.svg.as_bytes())?;
        if let Err(e) = write_atomic(&json_path, data.as_bytes()) {
            let _ = fs::remove_file(&svg_path);
            return Err(e);
        }
        Ok(Output::Files(vec![svg_path, json_path]))
    }
}

fn validate<T>(r: critline_core::Result<T>, key: &str) -> Result<T> {
    r.map_err(|e| CliError::config(key, e.to_string()))
}

fn positive(x: f64, key: &str) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::config(key, format!("{x} is not positive")))
    }
}

fn parse_pair(s: &str, key: &str) -> Result<(f64, f64)> {
    let z = parse_complex(s).map_err(|e| CliError::config(key, e))?;
    Ok((z.re, z.im))
}

/// Round to 15 significant digits and print the shortest form; the imaginary part is
/// omitted when it rounds to zero relative to the real part.
pub fn format_complex(z: ComplexValue) -> String {
    let round = |x: f64| format!("{x:.14e}").parse::<f64>().unwrap_or(x);
    let (re, im) = (round(z.re), round(z.im));
    if im.abs() <= 1e-15 * re.abs().max(1e-300) || im == 0.0 {
        format!("{}", re + 0.0)
    } else if re == 0.0 {
        format!("{im}i")
    } else {
        format!("{re}{}{}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

/// Parse and dispatch; all artifacts are written before this returns.
pub fn run(cli: &Cli) -> Result<Output> {
    let mut session = Session::new(cli.config.as_deref(), cli.cache_dir.clone(), cli.out.clone())?;
    session.run(&cli.command)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(ComplexValue::new(-1.0000000000000002, 1e-17)), "-1");
        assert_eq!(format_complex(ComplexValue::new(0.5, -0.25)), "0.5-0.25i");
        assert_eq!(format_complex(ComplexValue::new(0.0, 2.0)), "2i");
    }

    #[test]
    fn window_argument_round_trips() {
        let w: WindowArg = "-0.5,1.5,416,419.5".parse().unwrap();
        assert_eq!(w.to_string().parse::<WindowArg>().unwrap(), w);
        assert!("1,2,3".parse::<WindowArg>().is_err());
        assert!("2,1,3,4".parse::<WindowArg>().is_err());
    }

    #[test]
    fn cli_shape_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
