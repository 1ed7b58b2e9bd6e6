//! Invariant factors of a few side presentations.

use torpair::homology::{smith_normal_form, IntegerMatrix, RelatorPresentation};

fn main() {
    for name in ["worst2.pres", "three_loop.pres", "free2.pres"] {
        let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).expect("fixture");
        let p = RelatorPresentation::parse(&text).expect("parses");
        let rels: Vec<String> = (0..p.relators.rows).map(|i| p.render(i)).collect();
        println!("{name}: <{} | {}> = {}", p.generators.join(","), rels.join(", "), p.group().unwrap());
    }

    // straight from a matrix
    let m = IntegerMatrix::new(3, vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
    println!("matrix: {}", smith_normal_form(&m).unwrap());
}
