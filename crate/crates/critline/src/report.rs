//! JSON renderings of the core reports. Each file is one UTF-8 object whose `meta` member
//! carries the code version and config hash; non-finite numbers are written as `null`.

use critline_core::counting::CountReport;
use critline_core::critline::{PositionalReport, Violation};
use critline_core::planar::{
    Contour, DerivativeZero, DerivativeZeroScan, PropositionReport, TopologyReport, Window, ZeroTopology,
};
use critline_core::ComplexValue;
use serde_json::{json, Value};

pub fn meta(config_hash: &str) -> Value {
    json!({ "code_version": critline_core::CODE_VERSION, "config_hash": config_hash })
}

/// Attach `meta` to an object and serialise it with a trailing newline.
pub fn document(kind: &str, config_hash: &str, mut body: Value) -> String {
    if let Value::Object(map) = &mut body {
        map.insert("kind".into(), json!(kind));
        map.insert("meta".into(), meta(config_hash));
    }
    let mut s = serde_json::to_string_pretty(&body).expect("JSON values always serialise");
    s.push('\n');
    s
}

pub fn complex(z: ComplexValue) -> Value {
    json!([z.re, z.im])
}

pub fn window(w: &Window) -> Value {
    json!({ "sigma": [w.sigma_lo, w.sigma_hi], "t": [w.t_lo, w.t_hi] })
}

fn derivative_zero(z: &DerivativeZero) -> Value {
    json!({
        "location": complex(z.location),
        "abs_v": z.abs_v,
        "residual": z.residual,
        "quadrant": z.quadrant.map(|q| q.label()),
    })
}

pub fn derivative_scan(scan: &DerivativeZeroScan) -> Value {
    json!({
        "window": window(&scan.window),
        "seeds": scan.seeds,
        "failed_seeds": scan.failed_seeds,
        "zeros": scan.zeros.iter().map(derivative_zero).collect::<Vec<_>>(),
    })
}

pub fn propositions(r: &PropositionReport) -> Value {
    json!({
        "window": window(&r.window),
        "survey_window": window(&r.survey_window),
        "derivative_zeros": r.derivative_zeros.iter()
            .map(|(z, v)| json!({ "location": complex(*z), "abs_v": v }))
            .collect::<Vec<_>>(),
        "v_zeros": r.v_zeros,
        "p2": r.p2.label(),
        "p3": r.p3.label(),
        "p4": r.p4.label(),
        "p3_p4_agree": r.p3_p4_agree,
        "witnesses": r.witnesses.iter()
            .map(|w| json!({
                "proposition": w.proposition,
                "location": complex(w.location),
                "value": w.value,
                "note": w.note,
            }))
            .collect::<Vec<_>>(),
    })
}

fn zero_topology(z: &ZeroTopology) -> Value {
    json!({
        "t": z.t,
        "loop_closed": z.loop_closed,
        "encloses_one_zero": z.encloses_one_zero,
        "u_zeros_on_loop": z.u_zeros_on_loop,
        "u_poles_on_loop": z.u_poles_on_loop,
        "monotone_sweep": z.monotone_sweep,
        "half_crossings": z.half_crossings,
        "crossing_error": z.crossing_error,
        "companion_closed": z.companion_closed,
        "p4": z.p4,
    })
}

pub fn topology(r: &TopologyReport) -> Value {
    json!({
        "window": window(&r.window),
        "survey_window": window(&r.survey_window),
        "grid": [r.nx, r.ny],
        "zeros": r.zeros.iter().map(zero_topology).collect::<Vec<_>>(),
        "derivative_zeros": r.derivative_zeros.iter().map(derivative_zero).collect::<Vec<_>>(),
        "derivative_zeros_q4": r.derivative_zeros_q4,
        "q4_components": r.q4_components,
        "q4_connected": r.q4_connected(),
        "islands": r.islands,
        "clipped_regions": r.clipped_regions,
        "table1_inconsistent": r.table1_inconsistent,
        "p3": r.p3.label(),
        "p4": r.p4.label(),
        "p3_p4_agree": r.p3_p4_agree(),
    })
}

pub fn count(r: &CountReport) -> Value {
    json!({
        "fn": r.fn_id.name(),
        "y": match r.fn_id { critline_core::counting::CountFn::A0 { y } => Some(y), _ => None },
        "rect": window(&r.rect),
        "used_rect": window(&r.used_rect),
        "nudges": r.nudges,
        "winding": r.winding,
        "raw_winding": r.raw_winding,
        "samples": r.samples,
        "formula_value": r.formula_value,
        "deviation": r.deviation,
    })
}

pub fn positional(r: &PositionalReport) -> Value {
    json!({
        "mode": format!("{:?}", r.mode),
        "t0": r.t0,
        "n_tested": r.n_tested,
        "n_failures": r.n_failures,
        "failure_fraction": r.n_failures as f64 / r.n_tested.max(1) as f64,
        "failure_indices": r.failure_indices,
    })
}

pub fn violations(v: &[Violation]) -> Value {
    Value::Array(
        v.iter()
            .map(|v| json!({ "in_second": v.in_second, "index": v.index, "t": [v.t_lo, v.t_hi], "count": v.count }))
            .collect(),
    )
}

pub fn contour(c: &Contour) -> Value {
    json!({
        "level": c.level,
        "modulus": format!("{:?}", c.modulus),
        "closed": c.closed,
        "max_residual": c.max_residual,
        "unrefined": c.unrefined,
        "vertices": c.vertices.iter().map(|z| complex(*z)).collect::<Vec<_>>(),
    })
}
