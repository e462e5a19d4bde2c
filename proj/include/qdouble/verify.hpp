// The verification suites behind `verify <name>` and the acceptance run:
// each suite exercises one block of identities at the pinned grid sizes and
// returns a structured pass/fail report.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qd {

struct CheckItem {
    std::string name;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    bool pass = true;
    std::vector<CheckItem> items;
    std::vector<std::string> notes;  // informational diagnostics, never failures

    void check(const std::string& name, bool ok) {
        items.push_back({name, ok});
        pass = pass && ok;
    }
    void note(std::string text) { notes.push_back(std::move(text)); }
    int failed() const {
        int n = 0;
        for (auto& i : items) n += !i.pass;
        return n;
    }
};

// criterion 1: normalize vs the faithful-representation oracle
SuiteReport verify_pbw_oracle(int words = 200, int max_len = 12, int max_exp = 3,
                              uint64_t seed = 0x9d2c5681);
// criterion 2: Hopf axioms on generators and random elements
SuiteReport verify_hopf_axioms(int samples = 100, uint64_t seed = 0x6c078965);
// criterion 3: pairing axioms, closed form grid, convention diagnostic
SuiteReport verify_pairing_axioms(int pairs = 200, uint64_t seed = 0x5f356495);
// criterion 4: the presentation transported by psi under the double product
SuiteReport verify_double_presentation(uint64_t seed = 0x3ad8025f);
// criterion 5: integral-form identities at the pinned grids
SuiteReport verify_aform_suite();
// individual lemma suites (CLI verify subcommands)
SuiteReport verify_lemma21_suite(int max_a = 5, int max_b = 5);
SuiteReport verify_lemma22_suite(int part);
SuiteReport verify_delta_bracket_suite(int max_t = 5);
SuiteReport verify_divided_hopf_suite(int max_n = 4);
SuiteReport verify_divided_products_suite(int max_sum = 6);
// criterion 6: representation constructors, Verma submodule index, central element
SuiteReport verify_reps();
// criterion 7: Clebsch-Gordan decomposition at q = 2
SuiteReport verify_clebsch_gordan(int max_m = 4, int max_n = 4);
// criterion 8: Taft double dimensions, radical, Gram matrices, inventory
SuiteReport verify_taft_suite();
// criterion 9: rank-n degeneration, sl3 sample, negative controls
SuiteReport verify_cartan_suite();

// all of the above, in criterion order
std::vector<SuiteReport> verify_all();

}  // namespace qd
