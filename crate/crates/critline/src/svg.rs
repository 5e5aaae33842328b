//! Minimal SVG 1.1 writer with `σ` on the horizontal axis and `t` increasing upwards.

use std::fmt::Write as _;

use critline_core::planar::Window;
use critline_core::ComplexValue;

const MARGIN: f64 = 48.0;

/// Plot space: a data rectangle mapped into a pixel box.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    pub x: (f64, f64),
    pub y: (f64, f64),
    pub width: f64,
    pub height: f64,
}

impl Frame {
    pub fn of_window(w: &Window, width: f64, height: f64) -> Self {
        Self { x: (w.sigma_lo, w.sigma_hi), y: (w.t_lo, w.t_hi), width, height }
    }

    pub fn px(&self, x: f64, y: f64) -> (f64, f64) {
        let fx = (x - self.x.0) / (self.x.1 - self.x.0);
        let fy = (y - self.y.0) / (self.y.1 - self.y.0);
        (MARGIN + fx * self.width, MARGIN + (1.0 - fy) * self.height)
    }
}

pub struct Svg {
    frame: Frame,
    header: String,
    body: String,
}

impl Svg {
    /// `header` lands in an XML comment at the top of the file.
    pub fn new(frame: Frame, header: &str) -> Self {
        Self { frame, header: header.replace("--", "- -"), body: String::new() }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn polyline(&mut self, pts: &[(f64, f64)], stroke: &str, width: f64, dash: Option<&str>) {
        if pts.len() < 2 {
            return;
        }
        let mut d = String::with_capacity(pts.len() * 16);
        for &(x, y) in pts {
            let (px, py) = self.frame.px(x, y);
            let _ = write!(d, "{px:.2},{py:.2} ");
        }
        let dash = dash.map(|d| format!(" stroke-dasharray=\"{d}\"")).unwrap_or_default();
        let _ = writeln!(
            self.body,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" stroke-width=\"{width}\"{dash}/>",
            d.trim_end()
        );
    }

    pub fn path_c(&mut self, pts: &[ComplexValue], stroke: &str, width: f64, dash: Option<&str>) {
        let p: Vec<(f64, f64)> = pts.iter().map(|z| (z.re, z.im)).collect();
        self.polyline(&p, stroke, width, dash);
    }

    /// Axis-aligned filled rectangle in data coordinates.
    pub fn rect(&mut self, x0: f64, y0: f64, x1: f64, y1: f64, fill: &str) {
        let (ax, ay) = self.frame.px(x0, y1);
        let (bx, by) = self.frame.px(x1, y0);
        let _ = writeln!(
            self.body,
            "<rect x=\"{ax:.2}\" y=\"{ay:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{fill}\" stroke=\"none\"/>",
            bx - ax,
            by - ay
        );
    }

    pub fn dot(&mut self, x: f64, y: f64, r: f64, fill: &str) {
        let (px, py) = self.frame.px(x, y);
        let _ = writeln!(self.body, "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"{r}\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"0.5\"/>");
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64) {
        self.polyline(&[a, b], stroke, width, None);
    }

    pub fn text_px(&mut self, x: f64, y: f64, anchor: &str, s: &str) {
        let s = s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(self.body, "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"{anchor}\">{s}</text>");
    }

    /// Frame, ticks and axis labels.
    fn axes(&self, x_label: &str, y_label: &str) -> String {
        let f = self.frame;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>",
            f.width, f.height
        );
        let mut tmp = Svg { frame: f, header: String::new(), body: String::new() };
        for x in ticks(f.x.0, f.x.1) {
            let (px, py) = f.px(x, f.y.0);
            let _ = writeln!(tmp.body, "<line x1=\"{px:.2}\" y1=\"{py:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"black\"/>", py + 4.0);
            tmp.text_px(px, py + 16.0, "middle", &trim(x));
        }
        for y in ticks(f.y.0, f.y.1) {
            let (px, py) = f.px(f.x.0, y);
            let _ = writeln!(tmp.body, "<line x1=\"{:.2}\" y1=\"{py:.2}\" x2=\"{px:.2}\" y2=\"{py:.2}\" stroke=\"black\"/>", px - 4.0);
            tmp.text_px(px - 6.0, py + 4.0, "end", &trim(y));
        }
        tmp.text_px(MARGIN + f.width / 2.0, MARGIN + f.height + 34.0, "middle", x_label);
        tmp.text_px(12.0, MARGIN - 12.0, "start", y_label);
        out.push_str(&tmp.body);
        out
    }

    pub fn finish(self, x_label: &str, y_label: &str) -> String {
        let w = self.frame.width + 2.0 * MARGIN;
        let h = self.frame.height + 2.0 * MARGIN;
        let mut out = String::new();
        let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
        let _ = writeln!(out, "<!-- {} -->", self.header);
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">"
        );
        let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
        let _ = writeln!(
            out,
            "<clipPath id=\"plot\"><rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{}\" height=\"{}\"/></clipPath>",
            self.frame.width, self.frame.height
        );
        let _ = writeln!(out, "<g clip-path=\"url(#plot)\">");
        out.push_str(&self.body);
        out.push_str("</g>\n");
        out.push_str(&self.axes(x_label, y_label));
        out.push_str("</svg>\n");
        out
    }
}

/// Round tick positions, about five per axis.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let raw = (hi - lo) / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 2.5, 5.0, 10.0].iter().map(|m| m * mag).find(|&s| s >= raw).unwrap_or(10.0 * mag);
    let mut v = Vec::new();
    let mut k = (lo / step).ceil();
    while k * step <= hi + 1e-9 * step {
        v.push(k * step);
        k += 1.0;
    }
    v
}

fn trim(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_axis_points_up() {
        let f = Frame { x: (0.0, 1.0), y: (10.0, 20.0), width: 100.0, height: 200.0 };
        assert_eq!(f.px(0.0, 20.0), (MARGIN, MARGIN));
        assert_eq!(f.px(1.0, 10.0), (MARGIN + 100.0, MARGIN + 200.0));
    }

    #[test]
    fn document_is_wellformed_enough() {
        let f = Frame { x: (0.0, 1.0), y: (0.0, 1.0), width: 100.0, height: 100.0 };
        let mut s = Svg::new(f, "hash -- x");
        s.polyline(&[(0.0, 0.0), (1.0, 1.0)], "black", 1.0, Some("4 2"));
        s.dot(0.5, 0.5, 3.0, "blue");
        let out = s.finish("σ", "t");
        assert!(out.starts_with("<?xml"));
        assert!(out.contains("<!-- hash - - x -->"));
        assert_eq!(out.matches("<svg").count(), 1);
        assert!(out.trim_end().ends_with("</svg>"));
        assert_eq!(ticks(415.0, 421.0), vec![416.0, 418.0, 420.0]);
        assert_eq!(ticks(0.0, 1.0), vec![0.0, 0.2, 0.4, 0.6000000000000001, 0.8, 1.0]);
    }
}
