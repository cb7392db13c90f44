use polyfam_core::dynamics::*;
use polyfam_core::geom::Vec2;

fn island_center(ob: &OuterBilliards, target: usize, x0: f64, x1: f64, y0: f64, y1: f64, step: f64, max_it: usize) -> Option<(Vec2, usize)> {
    let (mut sx, mut sy, mut cnt) = (0.0, 0.0, 0usize);
    let mut y = y0;
    while y < y1 {
        let mut x = x0;
        while x < x1 {
            if let Ok(r) = orbit(Vec2::new(x, y), ob, max_it, 1e-9) {
                if r.period == Some(target) {
                    sx += x; sy += y; cnt += 1;
                }
            }
            x += step;
        }
        y += step;
    }
    if cnt == 0 { None } else { Some((Vec2::new(sx / cnt as f64, sy / cnt as f64), cnt)) }
}

fn main() {
    let ob = OuterBilliards::standard(12);
    if let Some((c, n)) = island_center(&ob, 420, -0.82, -0.75, -1.0, -0.95, 0.0006, 3000) {
        println!("420 island: centroid ({:.6},{:.6}) from {n} samples", c.x, c.y);
        // refine: use the centroid orbit's own structure
        let g = polyfam_core::stargeom::gen_scale(12).unwrap().to_f64();
        println!("g = {g:.9}, g^2 = {:.9}", g * g);
        // search for the 14148 island nearby at scale g smaller
        for (bx0, bx1, by0, by1) in [
            (c.x - 0.03, c.x + 0.03, -1.0, c.y + 0.03),
        ] {
            if let Some((c3, n3)) = island_center(&ob, 14148, bx0, bx1, by0, by1, 0.00008, 16000) {
                println!("14148 island: centroid ({:.6},{:.6}) from {n3} samples", c3.x, c3.y);
            } else {
                println!("no 14148 island in box around 420 island");
            }
        }
    }
}
