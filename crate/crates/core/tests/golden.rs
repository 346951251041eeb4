use bipramsey::constructions;
use bipramsey::BipartiteColoring;

const FIGURE1: &str = include_str!("golden/figure1_k55.txt");
const EXTREMAL_R5: &str = include_str!("golden/extremal_r5.txt");

#[test]
fn figure1_matches_golden_bytes() {
    assert_eq!(constructions::figure1_k55().to_text(), FIGURE1);
}

#[test]
fn extremal_r5_matches_golden_bytes() {
    assert_eq!(constructions::extremal_p4free(5).unwrap().to_text(), EXTREMAL_R5);
}

#[test]
fn golden_files_parse_back() {
    assert_eq!(BipartiteColoring::parse(FIGURE1).unwrap(), constructions::figure1_k55());
    assert_eq!(BipartiteColoring::parse(EXTREMAL_R5).unwrap(), constructions::extremal_p4free(5).unwrap());
}
