/*
   Copyright 2025 The reflektor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "reflektor/field_suites.hpp"
#include "reflektor/group.hpp"
#include "reflektor/identities.hpp"
#include "reflektor/suites.hpp"
#include "reflektor/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace reflektor;
using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void print_matrix(const FieldMatrix& m) {
    for (int r = 0; r < m.dim(); ++r) {
        std::cout << "  [";
        for (int c = 0; c < m.dim(); ++c) std::cout << (c ? ", " : "") << m(r, c).to_string();
        std::cout << "]\n";
    }
}

std::string charpoly_text(const FieldMatrix& m) {
    const auto c = m.charpoly();
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)].is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string coef = c[static_cast<std::size_t>(i)].to_string();
        if (i == 0) out += "(" + coef + ")";
        else out += (c[static_cast<std::size_t>(i)].is_one() ? "" : "(" + coef + ")*") + std::string("X") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

std::string join_words(const std::vector<std::string>& w) {
    std::string s;
    for (const auto& x : w) s += (s.empty() ? "" : " ") + x;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of reflection-group presentations over cyclotomic fields", "reflektor"};
    app.set_version_flag("--version", std::string(REFLEKTOR_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)")->check(CLI::NonNegativeNumber);

    // upoly
    auto* up = app.add_subcommand("upoly", "u_n, v_n, cyclotomic polynomials and identity checks");
    std::string up_kind;
    long up_n = 0;
    auto* up_show = up->add_subcommand("show", "print u_n, v_n or Phi_n");
    up_show->add_option("kind", up_kind, "u, v or cyclotomic")->required()->check(CLI::IsMember({"u", "v", "cyclotomic"}));
    up_show->add_option("n", up_n, "index")->required();
    auto* up_theta = up->add_subcommand("theta", "product of the roots of v_n");
    up_theta->add_option("n", up_n, "index")->required()->check(CLI::PositiveNumber);
    auto* up_id = up->add_subcommand("identity", "check one identity over an index range");
    std::string id_name;
    long id_lo = -30, id_hi = 30;
    up_id->add_option("name", id_name, "identity tag (see 'upoly list')")->required();
    up_id->add_option("--lo", id_lo, "lowest index");
    up_id->add_option("--hi", id_hi, "highest index");
    auto* up_list = up->add_subcommand("list", "list identity tags");
    up->require_subcommand(1);

    // field
    auto* fd = app.add_subcommand("field", "cyclotomic constants, norms and the classification search");
    long f_n = 0, f_k = 1;
    auto* fd_root = fd->add_subcommand("root", "4cos^2(k pi/n) in Q(zeta_n)");
    fd_root->add_option("n", f_n)->required();
    fd_root->add_option("k", f_k)->required();
    auto* fd_sqrt = fd->add_subcommand("sqrt", "2cos(k pi/n) in Q(zeta_2n)");
    fd_sqrt->add_option("n", f_n)->required();
    fd_sqrt->add_option("k", f_k)->required();
    std::string f_const;
    auto* fd_norm = fd->add_subcommand("norm", "norm of a named constant (tau, omega, zeta7_half, i, sqrt2, gamma:n:k)");
    fd_norm->add_option("name", f_const)->required();
    long cls_bound = 12, cls_cap = 200;
    auto* fd_cls = fd->add_subcommand("classify", "search alpha beta = 4 gamma and alpha + beta + gamma = 4");
    fd_cls->add_option("--bound", cls_bound, "largest order p, q, r");
    fd_cls->add_option("--cap", cls_cap, "largest phi(conductor) examined");
    fd->require_subcommand(1);

    // verify
    auto* vf = app.add_subcommand("verify", "run verification suites");
    std::string suite_id, profile_name = "full";
    bool all = false, as_json = false, list = false, verbose = false;
    vf->add_option("suite", suite_id, "suite id");
    vf->add_flag("--all", all, "run every suite");
    vf->add_flag("--list", list, "list suites");
    vf->add_flag("--json", as_json, "JSON report (timing omitted, byte-stable)");
    vf->add_flag("-v,--verbose", verbose, "print every case");
    vf->add_option("--profile", profile_name, "quick or full");

    // rep
    auto* rp = app.add_subcommand("rep", "reflection representations and presets");
    std::string preset_name;
    bool print = false, want_cp = false;
    std::vector<std::string> word;
    auto* rp_preset = rp->add_subcommand("preset", "build a preset");
    rp_preset->add_option("name", preset_name)->required();
    rp_preset->add_flag("--print", print, "print generator matrices");
    auto* rp_delta = rp->add_subcommand("delta", "Delta of a rank-3 preset");
    rp_delta->add_option("name", preset_name)->required();
    auto* rp_theta = rp->add_subcommand("theta", "(theta, theta') of a rank-3 preset");
    rp_theta->add_option("name", preset_name)->required();
    auto* rp_word = rp->add_subcommand("word", "evaluate a word");
    rp_word->add_option("name", preset_name)->required();
    rp_word->add_option("word", word, "word tokens, e.g. s1 s2 s3")->required();
    rp_word->add_flag("--charpoly", want_cp, "print the characteristic polynomial");
    auto* rp_list = rp->add_subcommand("list", "list presets");
    auto* rp_catalog = rp->add_subcommand("catalog", "preset catalog as JSON");
    rp->require_subcommand(1);

    // group
    auto* gp = app.add_subcommand("group", "closure, orders and relations");
    std::string g_word, g_eq;
    std::size_t g_cap = 1000000;
    long g_n = 1;
    bool serial = false, g_json = false;
    auto add_preset = [&](CLI::App* c) {
        c->add_option("--preset", preset_name, "preset name")->required();
        c->add_flag("--json", g_json, "JSON output");
    };
    auto* gp_order = gp->add_subcommand("order", "closure order");
    add_preset(gp_order);
    gp_order->add_option("--cap", g_cap, "element cap");
    gp_order->add_flag("--serial", serial, "use the single-threaded reference closure");
    auto* gp_center = gp->add_subcommand("center", "order of the center");
    add_preset(gp_center);
    gp_center->add_option("--cap", g_cap, "element cap");
    auto* gp_eo = gp->add_subcommand("element-order", "order of a word");
    add_preset(gp_eo);
    gp_eo->add_option("--word", g_word)->required();
    auto* gp_sp = gp->add_subcommand("scalar-power", "is word^n scalar");
    add_preset(gp_sp);
    gp_sp->add_option("--word", g_word)->required();
    gp_sp->add_option("--n", g_n)->required();
    auto* gp_rel = gp->add_subcommand("relation", "check 'lhs = rhs' (or word = 1)");
    add_preset(gp_rel);
    gp_rel->add_option("--eq", g_eq)->required();
    auto* gp_unip = gp->add_subcommand("unipotent", "is the word unipotent");
    add_preset(gp_unip);
    gp_unip->add_option("--word", g_word)->required();
    gp->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (up->parsed()) {
            if (up_show->parsed()) {
                const UPoly& p = up_kind == "u" ? u_poly(up_n) : up_kind == "v" ? v_poly(up_n) : cyclotomic(up_n);
                std::cout << p.to_string() << "\n";
            } else if (up_theta->parsed()) {
                std::cout << theta(v_poly(up_n)).to_string() << "\n";
            } else if (up_list->parsed()) {
                for (const auto& s : identity_catalog()) std::cout << s.name << "  " << s.statement << "\n";
            } else if (up_id->parsed()) {
                const auto tag = identity_from_name(id_name);
                if (!tag) {
                    std::cerr << "unknown identity '" << id_name << "'\n";
                    return kUsage;
                }
                const IdentityReport r = check_identity(*tag, id_lo, id_hi);
                std::cout << id_name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checked << " checked)\n";
                return r.pass ? kPass : kFail;
            }
            return kPass;
        }

        if (fd->parsed()) {
            if (fd_root->parsed()) std::cout << root_of_v(f_n, f_k).to_string() << "\n";
            if (fd_sqrt->parsed()) std::cout << sqrt_root(f_n, f_k).to_string() << "\n";
            if (fd_norm->parsed()) std::cout << galois_norm(named_constant(f_const)).to_string() << "\n";
            if (fd_cls->parsed()) {
                const SuiteReport r = classification_suite(cls_bound, cls_cap);
                std::cout << r.to_text(true);
                return r.passed() ? kPass : kFail;
            }
            return kPass;
        }

        if (vf->parsed()) {
            if (list) {
                for (const auto& s : suite_catalog()) std::cout << s.id << "  " << s.subject << "\n";
                return kPass;
            }
            const auto profile = profile_from_name(profile_name);
            if (!profile) {
                std::cerr << "unknown profile '" << profile_name << "' (quick, full)\n";
                return kUsage;
            }
            if (all == !suite_id.empty()) {
                std::cerr << "give exactly one of <suite> or --all\n";
                return kUsage;
            }
            std::vector<SuiteReport> reports = all ? run_all(*profile) : std::vector<SuiteReport>{run_suite(suite_id, *profile)};
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.passed();
            if (as_json) {
                ordered_json out = ordered_json::array();
                for (const auto& r : reports) out.push_back(ordered_json::parse(r.to_json(true)));
                std::cout << (all ? out : out.front()).dump(2) << "\n";
            } else {
                for (const auto& r : reports) std::cout << r.to_text(verbose);
            }
            return ok ? kPass : kFail;
        }

        if (rp->parsed()) {
            if (rp_list->parsed()) {
                for (const auto& n : preset_names()) std::cout << n << "\n";
                for (const auto& n : preset_families()) std::cout << n << "\n";
                return kPass;
            }
            if (rp_catalog->parsed()) {
                std::cout << catalog_json();
                return kPass;
            }
            const ReflectionRep rep = preset(preset_name);
            if (rp_preset->parsed()) {
                std::cout << rep.name << ": rank " << rep.rank() << ", conductor " << rep.conductor() << "\n";
                for (int i = 0; i < rep.rank(); ++i)
                    for (int j = i + 1; j < rep.rank(); ++j)
                        if (!rep.spec.pairing(i, j).is_zero() || !rep.spec.coeffs[i][j].is_zero())
                            std::cout << "  edge s" << i + 1 << "-s" << j + 1 << ": k = " << rep.spec.coeffs[i][j].to_string()
                                      << ", " << rep.spec.coeffs[j][i].to_string() << "\n";
                if (print)
                    for (int i = 0; i < rep.rank(); ++i) {
                        std::cout << "s" << i + 1 << " =\n";
                        print_matrix(rep.generators[static_cast<std::size_t>(i)]);
                    }
            } else if (rp_delta->parsed()) {
                std::cout << delta(rep).to_string() << "\n";
            } else if (rp_theta->parsed()) {
                const auto [t, tp] = theta_pair(rep);
                std::cout << "theta  = " << t.to_string() << "\ntheta' = " << tp.to_string() << "\n";
            } else if (rp_word->parsed()) {
                const FieldMatrix m = eval_word(rep, join_words(word));
                print_matrix(m);
                if (want_cp) std::cout << "charpoly: " << charpoly_text(m) << "\n";
            }
            return kPass;
        }

        if (gp->parsed()) {
            const ReflectionRep rep = preset(preset_name);
            ordered_json j;
            j["preset"] = preset_name;
            int code = kPass;
            const auto t0 = std::chrono::steady_clock::now();
            if (gp_order->parsed() || gp_center->parsed()) {
                ClosureOptions opt;
                opt.cap = g_cap;
                opt.store_elements = gp_center->parsed();
                const ClosureResult c = serial ? closure_serial(rep.generators, opt) : closure_parallel(rep.generators, opt);
                if (c.cap_exceeded) {
                    j["cap_exceeded"] = true;
                    j["cap"] = g_cap;
                } else {
                    j["order"] = c.order;
                    if (gp_center->parsed()) j["center"] = center_order(c, rep.generators);
                }
            } else if (gp_eo->parsed()) {
                const auto o = element_order(eval_word(rep, g_word));
                j["word"] = g_word;
                if (o) j["order"] = *o;
                else j["order_exceeds_cap"] = true;
            } else if (gp_sp->parsed()) {
                const auto s = scalar_power_check(eval_word(rep, g_word), g_n);
                j["word"] = g_word;
                j["n"] = g_n;
                if (s) j["scalar"] = s->to_string();
                else {
                    j["scalar"] = nullptr;
                    code = kFail;
                }
            } else if (gp_rel->parsed()) {
                const bool holds = check_equation(rep, g_eq);
                j["relation"] = g_eq;
                j["holds"] = holds;
                code = holds ? kPass : kFail;
            } else if (gp_unip->parsed()) {
                const FieldMatrix m = eval_word(rep, g_word);
                j["word"] = g_word;
                j["unipotent"] = is_unipotent(m);
                j["identity"] = m.is_identity();
            }
            j["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            if (g_json) {
                std::cout << j.dump() << "\n";
            } else {
                for (auto it = j.begin(); it != j.end(); ++it)
                    std::cout << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
            }
            return code;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
