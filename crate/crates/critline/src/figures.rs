//! Data and SVG behind the six figures: `|V| = 1` / `|W| = 1` contour geometry, filled
//! `|V| ≤ 1` regions, lines of constant `arg W`, `arg U` along vertical lines, and the
//! off-axis example.

use std::f64::consts::{FRAC_PI_2, PI};

use critline_core::combinators::{oa_state, u_state, CounterexampleSpec, Route};
use critline_core::planar::{
    derivative_zeros_tall, extract_contours, grid_eval, iso_lines, line_points, Contour, DerivativeZero, FieldFn,
    GridField, LinePoints, Modulus, Window,
};
use critline_core::ComplexValue;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::report;
use crate::svg::{Frame, Svg};

pub struct FigureInput<'a> {
    /// Critical-line ordinates `γ/2` of the zeta zeros (zeros of `U` sit at `3/4 + iγ/2`,
    /// poles at `1/4 + iγ/2`), covering the figure window.
    pub zeta_line: &'a [f64],
    /// Grid spacing in both directions.
    pub cell: f64,
    /// Overrides the figure's default window.
    pub window: Option<Window>,
    /// Header line for the SVG comment.
    pub header: &'a str,
}

pub struct Figure {
    pub svg: String,
    pub data: Value,
}

pub const DELTA: f64 = 0.05;
pub const T_STAR: f64 = 418.85;

/// Default window of figure `n`.
pub fn default_window(n: u8) -> Result<Window> {
    let w = match n {
        1 | 4 => Window::new(-0.25, 1.25, 415.0, 421.0),
        2 => Window::new(-0.5, 1.5, 416.0, 419.5),
        3 => Window::new(-0.5, 1.5, 986.5, 989.5),
        // t range of the arg U traces; σ is unused
        5 => Window::new(0.5, 0.753, 415.0, 421.0),
        6 => Window::new(-0.25, 1.25, 417.5, 420.0),
        _ => return Err(CliError::Usage(format!("no figure {n}; figures are 1 to 6"))),
    };
    Ok(w?)
}

pub fn render(n: u8, input: &FigureInput<'_>) -> Result<Figure> {
    let window = match input.window {
        Some(w) => w,
        None => default_window(n)?,
    };
    window.check_domain()?;
    match n {
        1 => fig_revealing(window, input),
        2 | 3 => fig_regions(window, input),
        4 => fig_arg_w(window, input),
        5 => fig_arg_u(window, input),
        6 => fig_off_axis(window, input),
        _ => Err(CliError::Usage(format!("no figure {n}; figures are 1 to 6"))),
    }
}

fn frame(w: &Window) -> Frame {
    let height = 560.0;
    let width = (height * w.width() / w.height()).clamp(160.0, 900.0);
    Frame::of_window(w, width, height)
}

fn grid(window: Window, cell: f64, spec: Option<&CounterexampleSpec>) -> Result<GridField> {
    if !(cell > 0.0) {
        return Err(CliError::config("cell", "must be positive"));
    }
    let nx = ((window.width() / cell).round() as usize + 1).max(16);
    let ny = ((window.height() / cell).round() as usize + 1).max(16);
    Ok(grid_eval(window, nx, ny, FieldFn::W, spec)?)
}

fn in_window(ts: &[f64], w: &Window) -> Vec<f64> {
    ts.iter().copied().filter(|t| *t >= w.t_lo && *t <= w.t_hi).collect()
}

fn dots(svg: &mut Svg, sigma: f64, ts: &[f64], fill: &str) {
    for &t in ts {
        svg.dot(sigma, t, 3.0, fill);
    }
}

fn contours_json(cs: &[Contour]) -> Value {
    Value::Array(cs.iter().map(report::contour).collect())
}

fn line_json(lp: &LinePoints) -> Value {
    json!({ "v_zeros": lp.v_zeros, "v_poles": lp.v_poles, "plus_i": lp.plus_i, "minus_i": lp.minus_i })
}

fn dz_json(dz: &[DerivativeZero]) -> Value {
    Value::Array(dz.iter().map(|z| json!({ "location": report::complex(z.location), "abs_v": z.abs_v })).collect())
}

fn fig_revealing(w: Window, input: &FigureInput<'_>) -> Result<Figure> {
    let field = grid(w, input.cell, None)?;
    let cw = extract_contours(&field, 1.0, Modulus::AbsW)?;
    let cv = extract_contours(&field, 1.0, Modulus::AbsV)?;
    let lp = line_points(w.t_lo.max(0.0), w.t_hi, None)?;
    let uz = in_window(input.zeta_line, &w);
    let mut svg = Svg::new(frame(&w), input.header);
    for c in &cw {
        svg.path_c(&c.vertices, "black", 1.2, None);
    }
    for c in &cv {
        svg.path_c(&c.vertices, "black", 1.0, Some("5 3"));
    }
    dots(&mut svg, 0.5, &lp.v_zeros, "blue");
    dots(&mut svg, 0.5, &lp.v_poles, "yellow");
    dots(&mut svg, 0.75, &uz, "black");
    dots(&mut svg, 0.25, &uz, "red");
    let data = json!({
        "figure": 1,
        "window": report::window(&w),
        "abs_w_1": contours_json(&cw),
        "abs_v_1": contours_json(&cv),
        "line": line_json(&lp),
        "u_zeros": uz.iter().map(|t| [0.75, *t]).collect::<Vec<_>>(),
        "u_poles": uz.iter().map(|t| [0.25, *t]).collect::<Vec<_>>(),
    });
    Ok(Figure { svg: svg.finish("σ", "t"), data })
}

fn fig_regions(w: Window, input: &FigureInput<'_>) -> Result<Figure> {
    let field = grid(w, input.cell, None)?;
    let dz = derivative_zeros_tall(w, None)?;
    let lp = line_points(w.t_lo.max(0.0), w.t_hi, None)?;
    let gz = in_window(input.zeta_line, &w);
    let mut svg = Svg::new(frame(&w), input.header);

    // |V| ≤ 1, drawn as horizontal runs of grid cells
    let (dx, dy) = (w.width() / (field.nx - 1) as f64, w.height() / (field.ny - 1) as f64);
    for j in 0..field.ny {
        let inside = |i: usize| {
            let u = field.u[j * field.nx + i];
            u.is_finite() && ((ComplexValue::new(1.0, 0.0) + u) / (ComplexValue::new(1.0, 0.0) - u)).norm() <= 1.0
        };
        let mut i = 0;
        while i < field.nx {
            if !inside(i) {
                i += 1;
                continue;
            }
            let start = i;
            while i < field.nx && inside(i) {
                i += 1;
            }
            let t = field.t(j);
            svg.rect(field.sigma(start) - dx / 2.0, t - dy / 2.0, field.sigma(i - 1) + dx / 2.0, t + dy / 2.0, "#b9d7f0");
        }
    }

    let mut levels = vec![(0.9, "#888888"), (1.0, "red")];
    for z in &dz {
        levels.push((z.abs_v + 1e-3, "green"));
        levels.push((z.abs_v - 1e-3, "blue"));
    }
    let mut level_data = Vec::new();
    for &(level, colour) in &levels {
        let cs = extract_contours(&field, level, Modulus::AbsV)?;
        for c in &cs {
            svg.path_c(&c.vertices, colour, if level == 1.0 { 1.2 } else { 0.8 }, None);
        }
        level_data.push(json!({ "level": level, "colour": colour, "contours": contours_json(&cs) }));
    }
    dots(&mut svg, 0.5, &lp.v_zeros, "black");
    dots(&mut svg, 0.5, &lp.v_poles, "red");
    dots(&mut svg, 0.25, &gz, "green");
    dots(&mut svg, 0.75, &gz, "#8b4513");
    for z in &dz {
        svg.dot(z.location.re, z.location.im, 2.5, "#7f3fbf");
    }
    let data = json!({
        "figure": if w.t_lo > 900.0 { 3 } else { 2 },
        "window": report::window(&w),
        "levels": level_data,
        "line": line_json(&lp),
        "xi1_2s_zeros": gz.iter().map(|t| [0.25, *t]).collect::<Vec<_>>(),
        "xi1_2s_minus_1_zeros": gz.iter().map(|t| [0.75, *t]).collect::<Vec<_>>(),
        "derivative_zeros": dz_json(&dz),
    });
    Ok(Figure { svg: svg.finish("σ", "t"), data })
}

/// Argument levels and colours of the constant-`arg W` lines.
pub const ARG_W_LINES: [(f64, &str); 4] = [(0.0, "red"), (PI, "green"), (FRAC_PI_2, "cyan"), (-FRAC_PI_2, "magenta")];

/// Pieces of `{arg W = α}`: the zero set of `Im(e^{-iα}W)`, keeping only vertices where
/// `W` itself points along `α` (which discards the opposite ray and crossings through poles).
fn arg_lines(field: &GridField, alpha: f64) -> Vec<Vec<ComplexValue>> {
    let rot = ComplexValue::from_polar(1.0, -alpha);
    let values: Vec<f64> = field
        .values
        .iter()
        .zip(&field.poles)
        .map(|(w, &p)| if p || !w.is_finite() { f64::NAN } else { (rot * w).im / (1.0 + w.norm()) })
        .collect();
    let spec = field.spec.as_ref();
    let mut out = Vec::new();
    for (pts, _) in iso_lines(&values, field.nx, field.ny, field.window) {
        let mut piece = Vec::new();
        for p in pts {
            let st = match spec {
                Some(sp) => oa_state(p, sp),
                None => u_state(p, Route::Symmetric),
            };
            let good = !st.pole && {
                let w = st.w();
                w.is_finite() && (rot * w).re > 0.0 && (rot * w).arg().abs() < 0.2
            };
            if good {
                piece.push(p);
            } else if piece.len() > 1 {
                out.push(std::mem::take(&mut piece));
            } else {
                piece.clear();
            }
        }
        if piece.len() > 1 {
            out.push(piece);
        }
    }
    out
}

fn fig_arg_w(w: Window, input: &FigureInput<'_>) -> Result<Figure> {
    let field = grid(w, input.cell, None)?;
    let cw = extract_contours(&field, 1.0, Modulus::AbsW)?;
    let dz = derivative_zeros_tall(w, None)?;
    let lp = line_points(w.t_lo.max(0.0), w.t_hi, None)?;
    let uz = in_window(input.zeta_line, &w);
    let mut svg = Svg::new(frame(&w), input.header);
    let mut lines = Vec::new();
    for &(alpha, colour) in &ARG_W_LINES {
        let pieces = arg_lines(&field, alpha);
        for p in &pieces {
            svg.path_c(p, colour, 1.0, None);
        }
        lines.push(json!({
            "arg": alpha,
            "colour": colour,
            "pieces": pieces.iter().map(|p| p.iter().map(|z| report::complex(*z)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }));
    }
    for c in &cw {
        svg.path_c(&c.vertices, "black", 1.2, None);
    }
    dots(&mut svg, 0.5, &lp.v_zeros, "blue");
    dots(&mut svg, 0.5, &lp.v_poles, "yellow");
    dots(&mut svg, 0.75, &uz, "black");
    dots(&mut svg, 0.25, &uz, "black");
    for z in &dz {
        svg.dot(z.location.re, z.location.im, 2.5, "black");
    }
    let data = json!({
        "figure": 4,
        "window": report::window(&w),
        "abs_w_1": contours_json(&cw),
        "arg_w_lines": lines,
        "line": line_json(&lp),
        "w_prime_zeros": dz_json(&dz),
    });
    Ok(Figure { svg: svg.finish("σ", "t"), data })
}

/// Continuous `arg U(σ + it)` on `[t_lo, t_hi]`, sampled adaptively so that consecutive
/// principal arguments differ by less than 0.3. Steps that still jump by about `π` (a
/// path through a zero or pole of `U`) are taken in the decreasing direction.
pub fn arg_u_trace(sigma: f64, t_lo: f64, t_hi: f64) -> Vec<(f64, f64)> {
    let arg_at = |t: f64| u_state(ComplexValue::new(sigma, t), Route::Symmetric).u.arg();
    let wrap = |d: f64| {
        let mut d = (d + PI).rem_euclid(2.0 * PI) - PI;
        if d > 0.9 * PI {
            d -= 2.0 * PI;
        }
        d
    };
    let mut t = t_lo;
    let mut a = arg_at(t);
    let mut acc = a;
    let mut out = vec![(t, acc)];
    let mut h: f64 = 0.01;
    while t < t_hi {
        let step = h.min(t_hi - t);
        let b = arg_at(t + step);
        let d = wrap(b - a);
        if d.abs() > 0.3 && step > 1e-7 {
            h = step / 2.0;
            continue;
        }
        t += step;
        acc += d;
        a = b;
        out.push((t, acc));
        if d.abs() < 0.1 {
            h = (h * 1.5).min(0.01);
        }
    }
    out
}

fn fig_arg_u(w: Window, input: &FigureInput<'_>) -> Result<Figure> {
    let traces = [(0.5, "blue", None), (0.75, "red", None), (0.753, "red", Some("5 3"))];
    let curves: Vec<Vec<(f64, f64)>> = traces.iter().map(|(s, _, _)| arg_u_trace(*s, w.t_lo, w.t_hi)).collect();
    let (lo, hi) = curves
        .iter()
        .flatten()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, a)| (lo.min(a), hi.max(a)));
    let f = Frame { x: (w.t_lo, w.t_hi), y: (lo - 0.5, hi + 0.5), width: 720.0, height: 420.0 };
    let mut svg = Svg::new(f, input.header);
    for ((_, colour, dash), c) in traces.iter().zip(&curves) {
        svg.polyline(c, colour, 1.0, *dash);
    }
    let data = json!({
        "figure": 5,
        "t": [w.t_lo, w.t_hi],
        "traces": traces.iter().zip(&curves).map(|((s, colour, _), c)| json!({
            "sigma": s,
            "colour": colour,
            "samples": c.iter().map(|&(t, a)| [t, a]).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Figure { svg: svg.finish("t", "arg U"), data })
}

fn fig_off_axis(w: Window, input: &FigureInput<'_>) -> Result<Figure> {
    let spec = CounterexampleSpec::new(DELTA, T_STAR, Vec::new())?;
    let field = grid(w, input.cell, Some(&spec))?;
    let cw = extract_contours(&field, 1.0, Modulus::AbsW)?;
    let cv = extract_contours(&field, 1.0, Modulus::AbsV)?;
    let dz = derivative_zeros_tall(w, Some(&spec))?;
    let lp = line_points(w.t_lo.max(0.0), w.t_hi, Some(&spec))?;
    let uz = in_window(input.zeta_line, &w);
    let mut svg = Svg::new(frame(&w), input.header);
    for sigma in [0.2, 0.3, 0.7, 0.8] {
        svg.line((sigma, w.t_lo), (sigma, w.t_hi), "black", 0.8);
    }
    for c in &cw {
        svg.path_c(&c.vertices, "blue", 1.2, None);
    }
    for c in &cv {
        svg.path_c(&c.vertices, "red", 1.2, None);
    }
    dots(&mut svg, 0.5, &lp.v_zeros, "blue");
    dots(&mut svg, 0.5, &lp.v_poles, "yellow");
    dots(&mut svg, 0.75, &uz, "black");
    dots(&mut svg, 0.25, &uz, "red");
    for z in spec.zeros().iter().filter(|z| w.contains(**z)) {
        svg.dot(z.re, z.im, 3.0, "black");
    }
    for p in spec.poles().iter().filter(|p| w.contains(**p)) {
        svg.dot(p.re, p.im, 3.0, "red");
    }
    for z in &dz {
        svg.dot(z.location.re, z.location.im, 3.5, "black");
    }
    let data = json!({
        "figure": 6,
        "window": report::window(&w),
        "delta": DELTA,
        "t_star": T_STAR,
        "abs_w_oa_1": contours_json(&cw),
        "abs_v_oa_1": contours_json(&cv),
        "line": line_json(&lp),
        "derivative_zeros": dz_json(&dz),
        "planted_zeros": spec.zeros().iter().map(|z| report::complex(*z)).collect::<Vec<_>>(),
        "planted_poles": spec.poles().iter().map(|z| report::complex(*z)).collect::<Vec<_>>(),
    });
    Ok(Figure { svg: svg.finish("σ", "t"), data })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arg_u_decreases_on_the_critical_line() {
        let tr = arg_u_trace(0.5, 20.0, 30.0);
        assert!(tr.windows(2).all(|p| p[1].1 <= p[0].1 + 1e-9));
        // total drop is 2·(θ₁(30) - θ₁(20))
        let drop = tr[0].1 - tr.last().unwrap().1;
        let expect = 2.0 * (critline_core::complexfn::theta1(30.0) - critline_core::complexfn::theta1(20.0));
        assert!((drop - expect).abs() < 1e-6, "{drop} vs {expect}");
    }

    #[test]
    fn unknown_figure_is_a_usage_error() {
        assert!(default_window(7).is_err());
    }
}
