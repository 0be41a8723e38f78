# Fields, polynomials and matrices first; TSRs and their counts on top.
