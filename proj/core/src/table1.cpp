#include "primefree/scan.hpp"

namespace primefree::scan {

namespace {

// Certifiable pairs, one row per exponent t. An entry is marked
// primitive when no proper divisor s of t gives a certifiable (s, d),
// so the pair is not inherited from a sub-exponent via the subsequence
// relation. Primitivity here is always relative to this certifier.
Table1Entry p(std::uint64_t d) { return {d, true}; }
Table1Entry i(std::uint64_t d) { return {d, false}; }

const std::vector<Table1Row> kRows = {
    {2, {p(2), p(3), p(4), p(5), p(8), p(12), p(16)}},
    {3, {p(2), p(9)}},
    {4, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), p(24), p(40)}},
    {6, {i(2), i(3), i(4), i(5), p(7), i(8), i(9), i(12), i(16), p(24), p(56), p(72)}},
    {8, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), p(17), i(24), p(32), i(40),
         p(48), p(80), p(112)}},
    {10, {i(2), i(3), i(4), i(5), i(8), p(11), i(12), i(16), p(24), p(40)}},
    {12, {i(2), i(3), i(4), i(5), i(8), i(9), i(12), p(13), i(16), i(24), i(40),
          p(112), p(144), p(240)}},
    {16, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), i(17), i(24), i(32), i(40),
          i(48), p(64), i(80), i(112), p(544)}},
    {18, {i(2), i(3), i(4), i(5), i(7), i(8), i(9), i(12), i(16), p(19), i(24),
          p(27), p(36), p(37), p(54), i(56), p(63), i(72), p(252)}},
    {20, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), i(24), p(25), i(40), p(200)}},
    {22, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), p(23)}},
    {24, {i(2), i(3), i(4), i(5), i(8), i(9), i(12), i(13), i(16), i(24), i(40),
          p(73), i(112), i(144), p(208), i(240), p(288), p(576)}},
    {28, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), p(29)}},
    {30, {i(2), i(3), i(4), i(5), i(7), i(8), i(9), i(12), i(16), i(24), p(31),
          i(56), i(72), p(1116)}},
    {32, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), i(17), i(24), i(32), i(40),
          i(48), i(64), i(80), i(112), p(128), p(192), i(544)}},
    {36, {i(2), i(3), i(4), i(5), i(7), i(8), i(9), i(12), i(16), i(19), i(24),
          i(27), i(36), i(37), i(54), i(56), i(63), i(72), i(252), p(432), p(2664)}},
    {40, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), i(17), i(24), i(25), i(32),
          i(40), i(48), i(80), i(112), p(176), i(200), p(800), p(1968)}},
    {42, {i(2), i(3), i(4), i(5), i(7), i(8), i(9), i(12), i(16), i(24), p(43),
          p(49), i(56), i(72)}},
    {50, {i(2), i(3), i(4), i(5), i(8), i(11), i(12), i(16), i(24), i(40), p(101)}},
    {52, {i(2), i(3), i(4), i(5), i(8), i(12), i(16), i(24), i(40), p(53)}},
    {54, {i(2), i(3), i(4), i(5), i(7), i(8), i(9), i(12), i(16), i(19), i(24),
          i(27), i(36), i(37), i(54), i(56), i(63), i(72), p(81), i(252), p(1404)}},
};

}  // namespace

const std::vector<Table1Row>& table1_rows() { return kRows; }

}  // namespace primefree::scan
