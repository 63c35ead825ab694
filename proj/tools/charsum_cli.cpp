// charsum command-line tool. Talks to the library exclusively through the
// public C interface in charsum.h.

#include <charsum.h>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct FieldHandle {
    cs_field* f = nullptr;
    ~FieldHandle() { cs_field_destroy(f); }
};

[[noreturn]] void die_status(cs_status s) {
    std::cerr << cs_status_name(s) << ": " << cs_last_error() << "\n";
    std::exit(kExitUsage);
}

void need_ok(cs_status s) {
    if (s != CS_OK) die_status(s);
}

// Elements are written as integers (prime fields, negatives allowed) or as
// comma-separated coefficient lists "c0,c1,..." (extension fields).
int64_t parse_element(const std::string& text, int64_t p, int32_t r) {
    std::vector<int64_t> coeffs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        char* end = nullptr;
        long long v = std::strtoll(part.c_str(), &end, 10);
        if (end == part.c_str() || *end != '\0') {
            std::cerr << "InvalidArgument: bad element '" << text << "'\n";
            std::exit(kExitUsage);
        }
        coeffs.push_back(v);
    }
    if (coeffs.empty() || static_cast<int32_t>(coeffs.size()) > r) {
        std::cerr << "InvalidArgument: element '" << text << "' needs 1.." << r
                  << " coefficients\n";
        std::exit(kExitUsage);
    }
    int64_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        int64_t c = ((coeffs[i] % p) + p) % p;
        code = code * p + c;
    }
    return code;
}

// Characters: eps | phi | chi<m>[^j] (canonical order-m character, j-th
// power) | e<k> (raw exponent k).
int64_t parse_char_exponent(const std::string& name, int64_t q) {
    int64_t modulus = q - 1;
    if (name == "eps") return 0;
    if (name == "phi") return modulus / 2;
    if (name.rfind("chi", 0) == 0) {
        std::string rest = name.substr(3);
        int64_t power = 1;
        auto caret = rest.find('^');
        if (caret != std::string::npos) {
            power = std::strtoll(rest.substr(caret + 1).c_str(), nullptr, 10);
            rest = rest.substr(0, caret);
        }
        int64_t m = std::strtoll(rest.c_str(), nullptr, 10);
        if (m <= 0 || modulus % m != 0) {
            std::cerr << "OrderDoesNotDivide: no character of order " << m << "\n";
            std::exit(kExitUsage);
        }
        return ((modulus / m * power) % modulus + modulus) % modulus;
    }
    if (name.size() > 1 && name[0] == 'e') {
        int64_t k = std::strtoll(name.substr(1).c_str(), nullptr, 10);
        return ((k % modulus) + modulus) % modulus;
    }
    std::cerr << "InvalidArgument: bad character '" << name << "'\n";
    std::exit(kExitUsage);
}

std::vector<int64_t> parse_char_list(const std::string& text, int64_t q) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_char_exponent(part, q));
    return out;
}

// Monic-or-not polynomial like "x^4+1", "x^5+3x^3+2x", "x^7-x-1";
// coefficients are integers reduced into the prime subfield.
std::vector<int64_t> parse_poly(const std::string& text, int64_t p) {
    std::vector<int64_t> coeffs(1, 0);
    auto ensure = [&](std::size_t deg) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    };
    std::size_t i = 0;
    int sign = 1;
    auto error = [&]() {
        std::cerr << "InvalidArgument: bad polynomial '" << text << "'\n";
        std::exit(kExitUsage);
    };
    while (i < text.size()) {
        if (text[i] == '+') {
            sign = 1;
            ++i;
            continue;
        }
        if (text[i] == '-') {
            sign = -1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        int64_t coef = 1;
        bool have_digits = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coef = coef * 10 + (text[i] - '0');
                ++i;
            }
            have_digits = true;
        }
        if (i < text.size() && (text[i] == '*')) ++i;
        std::size_t deg = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) error();
                deg = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    deg = deg * 10 + (text[i] - '0');
                    ++i;
                }
            }
        } else if (!have_digits) {
            error();
        }
        ensure(deg);
        int64_t c = ((sign * coef) % p + p) % p;
        coeffs[deg] = (coeffs[deg] + c) % p;
        sign = 1;
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::string format_value(double re, double im, double err, int64_t q) {
    double tol = 1e-6 * static_cast<double>(q) + err;
    double n = std::nearbyint(re);
    if (std::fabs(im) <= tol && std::fabs(re - n) <= tol) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(n));
        return buf;
    }
    char buf[96];
    if (std::fabs(im) > err + 1e-12)
        std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)±%.3g", re, im, err);
    else
        std::snprintf(buf, sizeof buf, "%.12g±%.3g", re, err);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

int write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "IoError: cannot open " << path << "\n";
        return kExitIo;
    }
    out << content;
    if (!out.good()) {
        std::cerr << "IoError: write to " << path << " failed\n";
        return kExitIo;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"character sums, Gaussian hypergeometric series over F_q, "
                 "and hyperelliptic point counts"};
    app.require_subcommand(1);

    // ------------------------------------------------------------- eval
    auto* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->require_subcommand(1);

    int64_t p = 0;
    int32_t r = 1;
    std::string a_text = "1", b_text = "1", x_text = "1", lambda_text = "1";
    std::string flavor = "psi", kind = "legendre", form = "two_squares";
    std::string top_text, bottom_text, poly_text;
    int64_t m = 2, n = 2;
    int32_t trials = 20;
    uint64_t seed = 1;

    auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "field characteristic (odd prime)")->required();
        cmd->add_option("--r", r, "extension degree (default 1)");
    };

    auto* ev_sum = eval->add_subcommand("sum", "pair character sum psi/phi_(m,n)(a,b)");
    add_field_opts(ev_sum);
    ev_sum->add_option("--m", m)->required();
    ev_sum->add_option("--n", n)->required();
    ev_sum->add_option("--a", a_text)->required();
    ev_sum->add_option("--b", b_text)->required();
    ev_sum->add_option("--flavor", flavor, "psi | phi");

    auto* ev_hyper = eval->add_subcommand("hyper", "Gaussian hypergeometric series value");
    add_field_opts(ev_hyper);
    ev_hyper->add_option("--top", top_text, "characters, e.g. phi,phi or chi4,chi4^3")->required();
    ev_hyper->add_option("--bottom", bottom_text, "characters, e.g. eps")->required();
    ev_hyper->add_option("--x", x_text)->required();

    auto* ev_trace = eval->add_subcommand("trace", "Frobenius trace of a parameterized curve");
    add_field_opts(ev_trace);
    ev_trace->add_option("--kind", kind, "legendre | clausen");
    ev_trace->add_option("--lambda", lambda_text)->required();

    auto* ev_count = eval->add_subcommand("count", "projective point count of y^2 = f(x)");
    add_field_opts(ev_count);
    ev_count->add_option("--f", poly_text, "monic polynomial, e.g. x^4+1")->required();

    auto* ev_jac = eval->add_subcommand("jacobian", "Jacobian order plus annihilation check");
    ev_jac->add_option("--p", p)->required();
    ev_jac->add_option("--f", poly_text, "odd-degree monic squarefree f over F_p")->required();
    ev_jac->add_option("--trials", trials);
    ev_jac->add_option("--seed", seed);

    auto* ev_rep = eval->add_subcommand("represent", "quadratic-form representation of p");
    ev_rep->add_option("--p", p)->required();
    ev_rep->add_option("--form", form, "two_squares | two_squares_xodd | a2_3b2 | a2_2b2");

    // ------------------------------------------------------------- verify
    auto* verify = app.add_subcommand("verify", "run identity sweeps");
    std::vector<std::string> identities;
    bool all = false, exhaustive = false, no_timing = false;
    int64_t q_min = 3, q_max = 2000, samples = 50;
    uint64_t vseed = 42;
    double tolerance = -1.0;
    int threads = 0;
    std::string json_path;
    verify->add_option("--identity", identities, "identity name (repeatable)");
    verify->add_flag("--all", all, "run the whole registry");
    verify->add_option("--q-min", q_min);
    verify->add_option("--q-max", q_max);
    verify->add_option("--samples", samples, "random samples per field (seeded)");
    verify->add_flag("--exhaustive", exhaustive, "exhaustive parameter sweeps");
    verify->add_option("--seed", vseed);
    verify->add_option("--tolerance", tolerance, "absolute tolerance (default 1e-6*q)");
    verify->add_option("--threads", threads);
    verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    verify->add_flag("--no-timing", no_timing, "omit wall_ms fields from the report");

    auto* idlist = app.add_subcommand("identities", "list the identity registry");

    // ------------------------------------------------------------- table
    auto* table = app.add_subcommand("table", "emit a CSV/JSON value table");
    std::string family = "count_mm", out_path = "-", format = "csv";
    table->add_option("--family", family, "count_mm | count_psi24 | jacobsthal")->required();
    table->add_option("--p", p)->required();
    table->add_option("--r", r);
    table->add_option("--m", m);
    table->add_option("--n", n);
    table->add_option("--out", out_path, "output path ('-' for stdout)");
    table->add_option("--format", format, "csv | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (idlist->parsed()) {
        char* text = nullptr;
        need_ok(cs_identity_list(&text));
        std::cout << text;
        cs_string_free(text);
        return kExitOk;
    }

    if (eval->parsed()) {
        if (ev_rep->parsed()) {
            int64_t first = 0, second = 0;
            int32_t ambiguous = 0;
            need_ok(cs_represent(p, form.c_str(), &first, &second, &ambiguous));
            std::string l1 = "x", l2 = "y";
            if (form == "two_squares") l1 = "c4", l2 = "d4";
            if (form == "a2_3b2") l1 = "a3", l2 = "b3";
            if (form == "a2_2b2") l1 = "a8", l2 = "b8";
            std::cout << l1 << "=" << first << " " << l2 << "=" << second;
            if (ambiguous) {
                if (form == "two_squares_xodd")
                    std::cout << " (sign_ambiguous " << l1 << "," << l2 << ")";
                else
                    std::cout << " (sign_ambiguous " << l2 << ")";
            }
            std::cout << "\n";
            return kExitOk;
        }
        if (ev_jac->parsed()) {
            auto coeffs = parse_poly(poly_text, p);
            int64_t order = 0;
            int32_t failures = 0;
            need_ok(cs_jacobian(p, coeffs.data(), coeffs.size(), trials, seed, &order, &failures));
            std::cout << "order=" << order << " annihilation="
                      << (failures == 0 ? "pass" : "FAIL") << " trials=" << trials << "\n";
            return failures == 0 ? kExitOk : kExitVerifyFailed;
        }

        FieldHandle F;
        need_ok(cs_field_create(p, r, &F.f));
        int64_t q = cs_field_q(F.f);

        if (ev_sum->parsed()) {
            int fl = flavor == "phi" ? CS_FLAVOR_PHI : CS_FLAVOR_PSI;
            if (flavor != "phi" && flavor != "psi") {
                std::cerr << "InvalidArgument: flavor must be psi or phi\n";
                return kExitUsage;
            }
            int64_t out = 0;
            need_ok(cs_pair_sum(F.f, m, n, parse_element(a_text, p, r),
                                parse_element(b_text, p, r), fl, &out));
            std::cout << out << "\n";
            return kExitOk;
        }
        if (ev_hyper->parsed()) {
            auto top = parse_char_list(top_text, q);
            auto bottom = parse_char_list(bottom_text, q);
            double re = 0, im = 0, err = 0;
            need_ok(cs_hyper(F.f, top.data(), top.size(), bottom.data(), bottom.size(),
                             parse_element(x_text, p, r), &re, &im, &err));
            std::cout << format_value(re, im, err, q) << "\n";
            return kExitOk;
        }
        if (ev_trace->parsed()) {
            int k = kind == "clausen" ? CS_TRACE_CLAUSEN : CS_TRACE_LEGENDRE;
            if (kind != "clausen" && kind != "legendre") {
                std::cerr << "InvalidArgument: kind must be legendre or clausen\n";
                return kExitUsage;
            }
            int64_t out = 0;
            need_ok(cs_trace(F.f, k, parse_element(lambda_text, p, r), &out));
            std::cout << out << "\n";
            return kExitOk;
        }
        if (ev_count->parsed()) {
            auto coeffs = parse_poly(poly_text, p);
            int64_t count = 0;
            need_ok(cs_count_points(F.f, coeffs.data(), coeffs.size(), &count, nullptr, nullptr));
            std::cout << count << "\n";
            return kExitOk;
        }
    }

    if (verify->parsed()) {
        if (identities.empty() && !all) {
            std::cerr << "InvalidArgument: pass --identity NAME or --all\n";
            return kExitUsage;
        }
        std::string cfg = "{";
        cfg += "\"identities\":[";
        if (all) {
            cfg += "\"all\"";
        } else {
            for (std::size_t i = 0; i < identities.size(); ++i) {
                if (i) cfg += ",";
                cfg += "\"" + json_escape(identities[i]) + "\"";
            }
        }
        cfg += "],";
        cfg += "\"q_min\":" + std::to_string(q_min) + ",";
        cfg += "\"q_max\":" + std::to_string(q_max) + ",";
        cfg += "\"seed\":" + std::to_string(vseed) + ",";
        cfg += "\"samples\":" + std::to_string(samples) + ",";
        cfg += "\"exhaustive\":" + std::string(exhaustive ? "true" : "false") + ",";
        cfg += "\"threads\":" + std::to_string(threads) + ",";
        cfg += "\"timing\":" + std::string(no_timing ? "false" : "true");
        if (tolerance > 0) cfg += ",\"tolerance\":" + std::to_string(tolerance);
        if (const char* corrupt = std::getenv("CHARSUM_TEST_CORRUPT"))
            cfg += ",\"corrupt\":\"" + json_escape(corrupt) + "\"";
        cfg += "}";

        char* report = nullptr;
        cs_status s = cs_verify(cfg.c_str(), &report);
        if (s != CS_OK && s != CS_VERIFY_FAILED) die_status(s);

        std::string report_str = report ? report : "";
        cs_string_free(report);

        if (json_path == "-") {
            std::cout << report_str;
        } else {
            // Short human summary on stdout; the JSON goes to --json.
            std::size_t pos = report_str.find("\"summary\"");
            std::size_t end = pos == std::string::npos ? 0 : report_str.find('}', pos);
            if (pos != std::string::npos)
                std::cout << "summary " << report_str.substr(pos + 10, end - pos - 9) << "\n";
            std::cout << (s == CS_OK ? "all identities passed" : "FAILURES detected") << "\n";
            if (!json_path.empty()) {
                int rc = write_output(json_path, report_str);
                if (rc != kExitOk) return rc;
            }
        }
        return s == CS_OK ? kExitOk : kExitVerifyFailed;
    }

    if (table->parsed()) {
        std::string spec = "{";
        spec += "\"family\":\"" + json_escape(family) + "\",";
        spec += "\"p\":" + std::to_string(p) + ",";
        spec += "\"r\":" + std::to_string(r) + ",";
        spec += "\"m\":" + std::to_string(m) + ",";
        spec += "\"n\":" + std::to_string(n) + ",";
        spec += "\"format\":\"" + json_escape(format) + "\"}";
        char* out = nullptr;
        need_ok(cs_table(spec.c_str(), &out));
        std::string content = out ? out : "";
        cs_string_free(out);
        return write_output(out_path, content);
    }

    return kExitUsage;
}
