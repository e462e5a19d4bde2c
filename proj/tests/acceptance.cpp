// Acceptance suite: runs every criterion at the pinned grid sizes and
// prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "qdouble/textio.hpp"
#include "qdouble/verify.hpp"

using namespace qd;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const SuiteReport& r) {
    std::printf("criterion %2d [%-20s] %s\n", number, label.c_str(), r.pass ? "PASS" : "FAIL");
    if (!r.pass) {
        ++failures;
        for (auto& i : r.items)
            if (!i.pass) std::printf("    failed: %s\n", i.name.c_str());
    }
    for (auto& n : r.notes) std::printf("    note: %s\n", n.c_str());
}

#ifdef QDOUBLE_CLI_PATH
std::string run_cli_verify_all(int* exit_code) {
    std::string cmd = std::string(QDOUBLE_CLI_PATH) + " verify all 2>/dev/null";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    *exit_code = pclose(p);
    return out;
}
#endif

}  // namespace

int main() {
    std::printf("acceptance: quantum double of the Borel of U_q(sl_2)\n");

    criterion(1, "pbw-oracle", verify_pbw_oracle(200, 12, 3));
    criterion(2, "hopf-axioms", verify_hopf_axioms(100));
    criterion(3, "pairing-axioms", verify_pairing_axioms(200));
    criterion(4, "double-presentation", verify_double_presentation());
    criterion(5, "aform", verify_aform_suite());
    criterion(6, "representations", verify_reps());
    criterion(7, "clebsch-gordan", verify_clebsch_gordan(4, 4));
    criterion(8, "taft", verify_taft_suite());
    criterion(9, "cartan", verify_cartan_suite());

#ifdef QDOUBLE_CLI_PATH
    {
        SuiteReport r;
        r.suite = "cli";
        int code1 = 0, code2 = 0;
        std::string out1 = run_cli_verify_all(&code1);
        std::string out2 = run_cli_verify_all(&code2);
        r.check("`verify all` exits 0", code1 == 0 && code2 == 0);
        r.check("reports are byte-identical across runs", !out1.empty() && out1 == out2);
        bool enumerated = true;
        Json j;
        try {
            j = Json::parse(out1);
            for (int c = 1; c <= 9; ++c) {
                bool seen = false;
                for (auto& rep : j.at("reports"))
                    if (rep.contains("criterion") && rep.at("criterion") == c) seen = true;
                enumerated = enumerated && seen;
            }
            enumerated = enumerated && j.at("pass").get<bool>();
        } catch (...) {
            enumerated = false;
        }
        r.check("the JSON report enumerates criteria 1-9", enumerated);
        criterion(10, "cli", r);
    }
#else
    std::printf("criterion 10 [cli]: skipped (no CLI path wired in)\n");
    ++failures;
#endif

    std::printf(failures ? "ACCEPTANCE: FAIL (%d criteria failed)\n" : "ACCEPTANCE: PASS\n",
                failures);
    return failures ? 1 : 0;
}
