//! Deterministic SVG rendering of a [`Figure`].
//!
//! Every coordinate is exact until the last step, where it is printed with
//! [`Rational::to_decimal`] at six places. Figure space has y pointing up;
//! SVG space has y pointing down, so `y` is drawn at `top - y`.

use std::fmt::Write;

use crate::geometry::{Figure, Point};
use crate::numeric::Rational;

const DIGITS: usize = 6;

/// Checker colours, applied to triangles by index parity in figure order.
pub const SHADE_COLORS: [&str; 2] = ["#d9c7a3", "#a3b8d9"];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SvgOptions {
    pub shade: bool,
}

struct Frame {
    min_x: Rational,
    top: Rational,
    width: Rational,
    height: Rational,
}

impl Frame {
    fn of(fig: &Figure) -> Frame {
        let mut points = fig.points().values();
        let Some(first) = points.next() else {
            let side = fig.side().cloned().unwrap_or_else(Rational::one);
            return Frame { min_x: Rational::zero(), top: side.clone(), width: side.clone(), height: side };
        };
        let (mut min_x, mut max_x) = (first.x.clone(), first.x.clone());
        let (mut min_y, mut max_y) = (first.y.clone(), first.y.clone());
        for p in points {
            if p.x < min_x {
                min_x = p.x.clone();
            }
            if p.x > max_x {
                max_x = p.x.clone();
            }
            if p.y < min_y {
                min_y = p.y.clone();
            }
            if p.y > max_y {
                max_y = p.y.clone();
            }
        }
        let (width, height) = match fig.side() {
            Some(side) => (side.clone(), side.clone()),
            None => {
                let w = &max_x - &min_x;
                let h = &max_y - &min_y;
                (if w.is_zero() { Rational::one() } else { w }, if h.is_zero() { Rational::one() } else { h })
            }
        };
        Frame { top: &min_y + &height, min_x, width, height }
    }

    fn x(&self, p: &Point) -> String {
        p.x.to_decimal(DIGITS)
    }

    fn y(&self, p: &Point) -> String {
        (&self.top - &p.y).to_decimal(DIGITS)
    }

    fn extent(&self, num: i64, den: i64) -> Rational {
        let scale = if self.width > self.height { &self.width } else { &self.height };
        scale * &Rational::new(num, den).expect("nonzero denominator")
    }

    fn unit(&self, num: i64, den: i64) -> String {
        self.extent(num, den).to_decimal(DIGITS)
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders segments as lines, points as labelled markers and, with
/// `shade`, triangles filled alternately with [`SHADE_COLORS`].
pub fn render_svg(fig: &Figure, options: &SvgOptions) -> String {
    let frame = Frame::of(fig);
    let mut out = String::new();
    let min_y = &frame.top - &frame.height;
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">",
        frame.min_x.to_decimal(DIGITS),
        min_y.to_decimal(DIGITS),
        frame.width.to_decimal(DIGITS),
        frame.height.to_decimal(DIGITS),
    );
    out.push_str("<!-- y axis flipped: figure y is drawn at (top - y), so A sits bottom-left -->\n");
    if options.shade {
        let _ = writeln!(
            out,
            "<!-- shading: triangles alternate {} / {} in figure order -->",
            SHADE_COLORS[0], SHADE_COLORS[1]
        );
        out.push_str("<g id=\"triangles\" stroke=\"none\">\n");
        for (i, t) in fig.triangles().iter().enumerate() {
            let Ok(vs) = fig.vertices_of(t) else { continue };
            let pts: Vec<String> = vs.iter().map(|p| format!("{},{}", frame.x(p), frame.y(p))).collect();
            let _ = writeln!(
                out,
                "  <polygon id=\"{}\" points=\"{}\" fill=\"{}\"/>",
                escape(&t.name),
                pts.join(" "),
                SHADE_COLORS[i % 2]
            );
        }
        out.push_str("</g>\n");
    }
    let _ = writeln!(out, "<g id=\"segments\" stroke=\"black\" stroke-width=\"{}\">", frame.unit(1, 300));
    for (a, b) in fig.segments() {
        let (Ok(p), Ok(q)) = (fig.point(a), fig.point(b)) else { continue };
        let _ = writeln!(
            out,
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            frame.x(p),
            frame.y(p),
            frame.x(q),
            frame.y(q)
        );
    }
    out.push_str("</g>\n");
    let radius = frame.unit(1, 150);
    let gap = frame.extent(1, 60);
    let font = frame.extent(1, 25);
    let mid_x = &frame.min_x + &(&frame.width * &Rational::new(1, 2).expect("nonzero denominator"));
    let mid_y = &frame.top - &(&frame.height * &Rational::new(1, 2).expect("nonzero denominator"));
    let _ =
        writeln!(out, "<g id=\"points\" font-family=\"serif\" font-size=\"{}\">", font.to_decimal(DIGITS));
    for (name, p) in fig.points() {
        // Labels sit on the side of the point facing the middle of the frame.
        let (lx, anchor) = if p.x > mid_x { (&p.x - &gap, "end") } else { (&p.x + &gap, "start") };
        let ly = if p.y > mid_y { &p.y - &(&gap + &font) } else { &p.y + &gap };
        let label = Point::new(lx, ly);
        let _ = writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/><text x=\"{}\" y=\"{}\" text-anchor=\"{anchor}\">{}</text>",
            frame.x(p),
            frame.y(p),
            radius,
            frame.x(&label),
            frame.y(&label),
            escape(name)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}
