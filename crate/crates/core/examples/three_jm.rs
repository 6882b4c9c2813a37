use clebsch_binom::angular::{cg_racah, cg_to_3jm, CgLabels};

fn main() {
    let cases = [[2, 2, 2, -2, 0, 0], [1, 1, 1, -1, 2, 0], [4, 0, 4, 0, 4, 0], [2, 0, 1, 1, 1, 1]];
    for t in cases {
        let labels = CgLabels::from_twice(t).unwrap();
        let cg = cg_racah(&labels);
        match cg_to_3jm(&labels, &cg) {
            Ok(w) => println!("{labels}\n    cg  = {cg}\n    3jm = {w}"),
            Err(e) => println!("{labels}: {e}"),
        }
    }
}
