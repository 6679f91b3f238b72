use std::ffi::CStr;
use std::ptr;

use nclce_ffi::*;

const SAMPLE: &[u8] = b"ababaabaabbbaa";

fn text(bytes: &[u8]) -> *mut NclceText {
    let mut t = ptr::null_mut();
    assert_eq!(
        unsafe { nclce_text_from_bytes(bytes.as_ptr(), bytes.len(), &mut t) },
        NclceStatus::Ok
    );
    t
}

#[test]
fn lce_queries_and_crossing_reports() {
    let t = text(SAMPLE);
    unsafe {
        assert_eq!(nclce_text_len(t), 14);
        let mut lce = ptr::null_mut();
        assert_eq!(nclce_lce_new(t, true, &mut lce), NclceStatus::Ok);
        let mut answer = 0;
        assert_eq!(nclce_lce_query(lce, 1, 3, &mut answer), NclceStatus::Ok);
        assert_eq!(answer, 3);
        let mut c = NclceCrossing::default();
        assert_eq!(
            nclce_lce_last_crossing(lce, &mut c),
            NclceStatus::InvalidArgument
        );
        answer = 99;
        assert_eq!(
            nclce_lce_query(lce, 2, 4, &mut answer),
            NclceStatus::Crossing
        );
        assert_eq!(answer, 99, "out pointer untouched on failure");
        assert_eq!(nclce_lce_last_crossing(lce, &mut c), NclceStatus::Ok);
        assert_eq!(
            c,
            NclceCrossing {
                earlier_a: 1,
                earlier_b: 3,
                current_a: 2,
                current_b: 4
            }
        );
        assert_eq!(
            nclce_lce_query(lce, 0, 3, &mut answer),
            NclceStatus::OutOfRange
        );
        assert_eq!(
            nclce_lce_query(lce, 1, 15, &mut answer),
            NclceStatus::OutOfRange
        );
        let mut st = NclceStats::default();
        assert_eq!(nclce_lce_stats(lce, &mut st), NclceStatus::Ok);
        assert_eq!((st.n, st.queries, st.bound_violations), (14, 1, 0));
        assert!(st.comparisons > 0 && st.max_forwarded_per_pair <= 4);
        nclce_lce_free(lce);
        nclce_text_free(t);
    }
}

#[test]
fn text_keeps_living_inside_the_structure() {
    let t = text(&[b'a'; 64]);
    unsafe {
        let mut lce = ptr::null_mut();
        assert_eq!(nclce_lce_new(t, false, &mut lce), NclceStatus::Ok);
        nclce_text_free(t);
        let mut answer = 0;
        assert_eq!(nclce_lce_query(lce, 1, 5, &mut answer), NclceStatus::Ok);
        assert_eq!(answer, 60);
        nclce_lce_free(lce);
    }
}

#[test]
fn runs_tree_and_squares() {
    let t = text(SAMPLE);
    unsafe {
        let mut runs = ptr::null_mut();
        assert_eq!(nclce_runs_compute(t, &mut runs), NclceStatus::Ok);
        assert_eq!(nclce_runs_len(runs), 6);
        let mut r = NclceRun::default();
        assert_eq!(nclce_runs_get(runs, 1, &mut r), NclceStatus::Ok);
        assert_eq!(
            r,
            NclceRun {
                start: 3,
                end: 10,
                period: 3
            }
        );
        assert_eq!(nclce_runs_get(runs, 6, &mut r), NclceStatus::OutOfRange);
        nclce_runs_free(runs);

        let w = text(b"aaababaabbabb");
        let mut tree = ptr::null_mut();
        assert_eq!(nclce_tree_build(w, 0, &mut tree), NclceStatus::Ok);
        assert_eq!(nclce_tree_len(tree), 27);
        assert_eq!(nclce_tree_order(tree), 0);
        let mut node = NclceInterval::default();
        assert_eq!(nclce_tree_node(tree, 0, &mut node), NclceStatus::Ok);
        assert_eq!(node, NclceInterval { lo: 0, hi: 13 });
        assert_eq!(
            nclce_tree_node(tree, 27, &mut node),
            NclceStatus::OutOfRange
        );
        nclce_tree_free(tree);
        assert_eq!(
            nclce_tree_build(w, 2, &mut tree),
            NclceStatus::InvalidArgument
        );
        nclce_text_free(w);

        let mut squares = 0;
        assert_eq!(nclce_square_count(t, &mut squares), NclceStatus::Ok);
        assert_eq!(squares, 10);
        nclce_text_free(t);
    }
}

#[test]
fn token_texts_and_empty_input() {
    let symbols = [5u64, 3, 5, 3];
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(
            nclce_text_from_symbols(symbols.as_ptr(), 4, &mut t),
            NclceStatus::Ok
        );
        let mut runs = ptr::null_mut();
        assert_eq!(nclce_runs_compute(t, &mut runs), NclceStatus::Ok);
        let mut r = NclceRun::default();
        assert_eq!(nclce_runs_get(runs, 0, &mut r), NclceStatus::Ok);
        assert_eq!(
            r,
            NclceRun {
                start: 1,
                end: 4,
                period: 2
            }
        );
        nclce_runs_free(runs);
        nclce_text_free(t);

        let mut empty = ptr::null_mut();
        assert_eq!(
            nclce_text_from_symbols(ptr::null(), 0, &mut empty),
            NclceStatus::Ok
        );
        assert_eq!(nclce_text_len(empty), 0);
        let mut squares = 7;
        assert_eq!(nclce_square_count(empty, &mut squares), NclceStatus::Ok);
        assert_eq!(squares, 0);
        nclce_text_free(empty);
    }
}

#[test]
fn null_arguments() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(
            nclce_text_from_bytes(ptr::null(), 3, &mut t),
            NclceStatus::NullPointer
        );
        assert_eq!(
            nclce_text_from_bytes(b"ab".as_ptr(), 2, ptr::null_mut()),
            NclceStatus::NullPointer
        );
        let mut lce = ptr::null_mut();
        assert_eq!(
            nclce_lce_new(ptr::null(), true, &mut lce),
            NclceStatus::NullPointer
        );
        let mut answer = 0;
        assert_eq!(
            nclce_lce_query(ptr::null_mut(), 1, 1, &mut answer),
            NclceStatus::NullPointer
        );
        let mut squares = 0;
        assert_eq!(
            nclce_square_count(ptr::null(), &mut squares),
            NclceStatus::NullPointer
        );
        assert_eq!(nclce_text_len(ptr::null()), 0);
        assert_eq!(nclce_runs_len(ptr::null()), 0);
        nclce_text_free(ptr::null_mut());
        nclce_lce_free(ptr::null_mut());
        nclce_runs_free(ptr::null_mut());
        nclce_tree_free(ptr::null_mut());
    }
}

#[test]
fn status_messages() {
    for (status, expected) in [
        (NclceStatus::Ok, "ok"),
        (NclceStatus::Crossing, "query crosses an earlier query"),
        (NclceStatus::Internal, "internal error"),
    ] {
        let msg = unsafe { CStr::from_ptr(nclce_status_message(status)) };
        assert_eq!(msg.to_str().unwrap(), expected);
    }
}
