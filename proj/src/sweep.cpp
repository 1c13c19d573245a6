// Copyright 2026 The cvbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvbell/sweep.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cvbell/error.hpp"
#include "cvbell/fidelity.hpp"

namespace cvbell {

const char *to_string(Family f) {
    switch (f) {
        case Family::Vacuum: return "vacuum";
        case Family::Psgs: return "psgs";
        case Family::Scs: return "scs";
        case Family::Kim: return "kim";
        case Family::Lossy: return "lossy";
    }
    return "?";
}

const char *to_string(Quantity q) {
    switch (q) {
        case Quantity::Chsh: return "chsh";
        case Quantity::Ch: return "ch";
        case Quantity::Fidelity: return "fidelity";
    }
    return "?";
}

const char *to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::Alpha: return "alpha";
        case SweepAxis::T: return "T";
        case SweepAxis::Epsilon: return "epsilon";
        case SweepAxis::Pm: return "pm";
        case SweepAxis::VarianceScale: return "variance_scale";
    }
    return "?";
}

const char *to_string(VarianceScaling v) { return v == VarianceScaling::Multiplicative ? "multiplicative" : "additive"; }

namespace {

constexpr double kDefaultR = 0.3;

double parse_double(const std::string &key, const std::string &text) {
    double v = 0.0;
    const char *b = text.data();
    const char *e = b + text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(*b))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(e[-1]))) --e;
    if (b < e && *b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) throw ConfigError("'" + key + "': not a number: '" + text + "'");
    return v;
}

long long parse_int(const std::string &key, const std::string &text) {
    long long v = 0;
    const char *b = text.data();
    const char *e = b + text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e || b == e) throw ConfigError("'" + key + "': not an integer: '" + text + "'");
    return v;
}

template <class E>
E parse_enum(const std::string &key, const std::string &text, std::initializer_list<std::pair<const char *, E>> opts) {
    for (const auto &[name, v] : opts)
        if (text == name) return v;
    std::string allowed;
    for (const auto &o : opts) allowed += std::string(allowed.empty() ? "" : ", ") + o.first;
    throw ConfigError("'" + key + "': unknown value '" + text + "' (expected one of: " + allowed + ")");
}

bool axis_allowed(Family f, Quantity q, SweepAxis a) {
    if (q == Quantity::Fidelity) return a == SweepAxis::Alpha;
    switch (a) {
        case SweepAxis::Alpha: return f == Family::Psgs || f == Family::Scs;
        case SweepAxis::T: return f == Family::Kim || f == Family::Lossy;
        case SweepAxis::Epsilon:
        case SweepAxis::Pm: return f == Family::Lossy;
        case SweepAxis::VarianceScale: return f == Family::Kim;
    }
    return false;
}

Scenario with_axis_value(const Scenario &s, double x) {
    Scenario c = s;
    switch (s.axis) {
        case SweepAxis::Alpha: c.alpha = x; break;
        case SweepAxis::T: c.T = x; break;
        case SweepAxis::Epsilon: c.epsilon = x; break;
        case SweepAxis::Pm: c.pm = x; break;
        case SweepAxis::VarianceScale: c.variance_scale = x; break;
    }
    return c;
}

StateModel state_of(const Scenario &c) {
    switch (c.family) {
        case Family::Vacuum: return model::Vacuum{};
        case Family::Psgs: return model::PurePsgs{c.r ? *c.r : optimal_r(c.alpha)};
        case Family::Scs: return model::Scs{c.alpha, Parity::Odd};
        case Family::Kim: {
            GaussianVariances v = c.variances ? *c.variances : GaussianVariances::squeezed_vacuum(c.r.value_or(kDefaultR));
            if (c.scaling == VarianceScaling::Multiplicative) {
                v.A *= c.variance_scale;
                v.B *= c.variance_scale;
            } else {
                v.A += c.variance_scale - 1.0;
                v.B += c.variance_scale - 1.0;
            }
            return model::KimConditional{v, c.T};
        }
        case Family::Lossy: {
            const double r = c.r.value_or(kDefaultR);
            if (c.pm < 1.0) return lossy_with_dark_counts(r, c.T, c.epsilon, c.pm);
            return model::LossyPsgs{r, c.T, c.epsilon};
        }
    }
    throw ConfigError("unknown state family");
}

}  // namespace

StateModel Scenario::state_at(double x) const { return state_of(with_axis_value(*this, x)); }

TwoModeQuasiprob Scenario::two_mode_at(double x) const {
    if (quantity == Quantity::Fidelity) throw InvalidArgument("two_mode_at: fidelity scenarios have no two-mode state");
    const Scenario c = with_axis_value(*this, x);
    if (c.family == Family::Scs && quantity == Quantity::Ch) return make_q_ecs(c.alpha);
    const Ordering kind = quantity == Quantity::Chsh ? Ordering::Wigner : Ordering::Q;
    return split_5050(SingleModeState::from_model(state_of(c)), kind);
}

void Scenario::validate() const {
    const std::string where = "scenario [" + name + "]: ";
    if (!axis_allowed(family, quantity, axis))
        throw ConfigError(where + "axis '" + to_string(axis) + "' does not apply to state '" + to_string(family) +
                          "' with '" + to_string(quantity) + "'");
    if (quantity == Quantity::Fidelity && family != Family::Psgs)
        throw ConfigError(where + "fidelity scenarios use state = psgs");
    if (family == Family::Kim && epsilon != 1.0) throw ConfigError(where + "kim uses an ideal detector (epsilon = 1)");
    if (family == Family::Kim && pm != 1.0) throw ConfigError(where + "pm applies to lossy states only");
    if (optimizer.starts < 1) throw ConfigError(where + "starts must be >= 1");
    for (double x : grid) {
        if (!std::isfinite(x)) throw ConfigError(where + "grid values must be finite");
        if (quantity == Quantity::Fidelity) {
            if (!(x > 0.0)) throw ConfigError(where + "alpha must be > 0");
            continue;
        }
        try {
            const Scenario c = with_axis_value(*this, x);
            if (c.family == Family::Scs && !(c.alpha > 0.0)) throw InvalidArgument("alpha must be > 0");
            if (c.family == Family::Lossy && !(c.pm >= 0.0 && c.pm <= 1.0))
                throw InvalidArgument("pm must lie in [0, 1]");
            if (c.family == Family::Kim && !(c.variance_scale > 0.0))
                throw InvalidArgument("variance_scale must be > 0");
            state_of(c).validate();
        } catch (const InvalidArgument &e) {
            throw ConfigError(where + std::string(to_string(axis)) + " = " + format_number(x) + ": " + e.what());
        }
    }
}

std::vector<double> parse_grid(const std::string &text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    std::vector<double> out;
    if (t.empty()) return out;
    if (t.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(t);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw ConfigError("grid: expected start:stop:step, got '" + text + "'");
        const double a = parse_double("grid", parts[0]);
        const double b = parse_double("grid", parts[1]);
        const double h = parse_double("grid", parts[2]);
        if (!(h > 0.0) || b < a) throw ConfigError("grid: need step > 0 and stop >= start in '" + text + "'");
        const long long n = static_cast<long long>(std::floor((b - a) / h + 1e-9));
        if (n > 1000000) throw ConfigError("grid: too many points in '" + text + "'");
        for (long long i = 0; i <= n; ++i) {
            // Round to 12 significant digits so 0.1 steps print cleanly.
            const double v = a + static_cast<double>(i) * h;
            out.push_back(std::stod(format_number(v)));
        }
        return out;
    }
    std::stringstream ss(t);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_double("grid", p));
    return out;
}

std::vector<Scenario> parse_config(const std::string &text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    std::vector<Scenario> out;
    for (const auto &[section, body] : tree) {
        if (body.empty()) throw ConfigError("config: key '" + section + "' is outside any [section]");
        Scenario s;
        s.name = section;
        std::optional<double> a_db, b_db, A, B;
        bool have_grid = false;
        for (const auto &[key, node] : body) {
            const std::string v = node.get_value<std::string>();
            if (key == "state")
                s.family = parse_enum<Family>(key, v,
                                              {{"vacuum", Family::Vacuum},
                                               {"psgs", Family::Psgs},
                                               {"scs", Family::Scs},
                                               {"kim", Family::Kim},
                                               {"lossy", Family::Lossy}});
            else if (key == "functional")
                s.quantity = parse_enum<Quantity>(
                    key, v, {{"chsh", Quantity::Chsh}, {"ch", Quantity::Ch}, {"fidelity", Quantity::Fidelity}});
            else if (key == "ch_sense")
                s.optimizer.ch_sense =
                    parse_enum<ChSense>(key, v, {{"magnitude", ChSense::Magnitude}, {"upper", ChSense::Upper}});
            else if (key == "axis")
                s.axis = parse_enum<SweepAxis>(key, v,
                                               {{"alpha", SweepAxis::Alpha},
                                                {"T", SweepAxis::T},
                                                {"epsilon", SweepAxis::Epsilon},
                                                {"pm", SweepAxis::Pm},
                                                {"variance_scale", SweepAxis::VarianceScale}});
            else if (key == "grid") {
                s.grid = parse_grid(v);
                have_grid = true;
            } else if (key == "alpha")
                s.alpha = parse_double(key, v);
            else if (key == "r")
                s.r = parse_double(key, v);
            else if (key == "T")
                s.T = parse_double(key, v);
            else if (key == "epsilon")
                s.epsilon = parse_double(key, v);
            else if (key == "pm")
                s.pm = parse_double(key, v);
            else if (key == "A")
                A = parse_double(key, v);
            else if (key == "B")
                B = parse_double(key, v);
            else if (key == "a_db")
                a_db = parse_double(key, v);
            else if (key == "b_db")
                b_db = parse_double(key, v);
            else if (key == "variance_scale")
                s.variance_scale = parse_double(key, v);
            else if (key == "scaling")
                s.scaling = parse_enum<VarianceScaling>(
                    key, v, {{"multiplicative", VarianceScaling::Multiplicative}, {"additive", VarianceScaling::Additive}});
            else if (key == "starts")
                s.optimizer.starts = static_cast<int>(parse_int(key, v));
            else if (key == "seed")
                s.optimizer.seed = static_cast<std::uint64_t>(parse_int(key, v));
            else if (key == "output")
                s.output = v;
            else
                throw ConfigError("config [" + section + "]: unknown key '" + key + "'");
        }
        if (!have_grid) throw ConfigError("config [" + section + "]: missing 'grid'");
        if (a_db.has_value() != b_db.has_value()) throw ConfigError("config [" + section + "]: give both a_db and b_db");
        if (A.has_value() != B.has_value()) throw ConfigError("config [" + section + "]: give both A and B");
        if (a_db && A) throw ConfigError("config [" + section + "]: give variances either in dB or linear, not both");
        if (a_db) s.variances = GaussianVariances::from_db(*a_db, *b_db);
        if (A) s.variances = GaussianVariances{*A, *B};
        s.validate();
        out.push_back(std::move(s));
    }
    if (out.empty()) throw ConfigError("config: no scenarios");
    return out;
}

std::vector<Scenario> load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

SweepRow evaluate_row(const Scenario &s, double x) {
    SweepRow row;
    row.axis = x;
    if (s.quantity == Quantity::Fidelity) {
        row.bell = best_approximation(x).fidelity;
        return row;
    }
    const auto two = s.two_mode_at(x);
    const Functional f = s.quantity == Quantity::Chsh ? Functional::Chsh : Functional::Ch;
    const BellResult res = optimize(f, two, s.optimizer);
    row.bell = res.value;
    row.argmax = res.argmax;
    row.converged = res.converged;
    row.p_success = success_probability(s.state_at(x));
    return row;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_header(Quantity q) {
    if (q == Quantity::Fidelity) return "alpha,F";
    return "axis,bell,p_success,z1r,z1i,z2r,z2i,z1pr,z1pi,z2pr,z2pi,converged";
}

std::string csv_line(const SweepRow &row, Quantity q) {
    std::string s = format_number(row.axis) + "," + format_number(row.bell);
    if (q == Quantity::Fidelity) return s;
    s += ",";
    if (row.p_success) s += format_number(*row.p_success);
    for (double v : row.argmax.to_array()) s += "," + format_number(v);
    s += row.converged ? ",1" : ",0";
    return s;
}

namespace {

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> f;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            f.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    f.push_back(cur);
    return f;
}

SweepRow parse_line(const std::string &line, Quantity q, const std::string &path) {
    const auto f = split_fields(line);
    const std::size_t want = q == Quantity::Fidelity ? 2 : 12;
    if (f.size() != want) throw IoError("'" + path + "': malformed row '" + line + "'");
    SweepRow r;
    try {
        r.axis = parse_double("axis", f[0]);
        r.bell = parse_double("bell", f[1]);
        if (q != Quantity::Fidelity) {
            if (!f[2].empty()) r.p_success = parse_double("p_success", f[2]);
            std::array<double, 8> x{};
            for (int k = 0; k < 8; ++k) x[k] = parse_double("argmax", f[3 + k]);
            r.argmax = DisplacementSet::from_array(x);
            r.converged = f[11] == "1";
        }
    } catch (const ConfigError &e) {
        throw IoError("'" + path + "': " + e.what());
    }
    return r;
}

void write_text(const std::string &path, const std::string &text, std::ios::openmode mode) {
    std::ofstream out(path, mode | std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write failed on '" + path + "'");
}

// Complete rows already present in a previous run's output. A trailing
// partial line (interrupted write) is dropped.
std::map<std::string, SweepRow> existing_rows(const std::string &path, Quantity q) {
    std::map<std::string, SweepRow> rows;
    std::ifstream in(path, std::ios::binary);
    if (!in) return rows;
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (text.empty()) return rows;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) break;
        const std::string line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (first) {
            if (line != csv_header(q))
                throw IoError("'" + path + "' exists with a different header; refusing to resume into it");
            first = false;
            continue;
        }
        auto row = parse_line(line, q, path);
        rows.emplace(split_fields(line)[0], row);
    }
    return rows;
}

}  // namespace

void emit_csv(const std::vector<SweepRow> &rows, const std::string &path, Quantity q) {
    std::string text = csv_header(q) + "\n";
    for (const auto &r : rows) text += csv_line(r, q) + "\n";
    write_text(path, text, std::ios::out | std::ios::trunc);
}

std::vector<SweepRow> read_csv(const std::string &path, Quantity q) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != csv_header(q)) throw IoError("'" + path + "': unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) rows.push_back(parse_line(line, q, path));
    return rows;
}

std::vector<SweepRow> run_scenario(const Scenario &s, const RunOptions &opts) {
    s.validate();
    const std::size_t n = s.grid.size();
    std::vector<std::optional<SweepRow>> rows(n);
    const bool to_file = !s.output.empty();

    if (to_file && opts.resume) {
        const auto done = existing_rows(s.output, s.quantity);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = done.find(format_number(s.grid[i]));
            if (it != done.end()) rows[i] = it->second;
        }
    }
    if (to_file) {
        // Rewrite what is kept, in grid order, then append as rows finish.
        std::string text = csv_header(s.quantity) + "\n";
        for (const auto &r : rows)
            if (r) text += csv_line(*r, s.quantity) + "\n";
        write_text(s.output, text, std::ios::out | std::ios::trunc);
    }

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < n; ++i)
        if (!rows[i]) pending.push_back(i);

    std::mutex mu;
    std::size_t next_task = 0;
    std::size_t next_commit = 0;
    std::exception_ptr failure;

    // Commits ready rows in grid order. Caller holds mu.
    auto commit = [&] {
        while (next_commit < n && rows[next_commit]) {
            const bool fresh = std::find(pending.begin(), pending.end(), next_commit) != pending.end();
            if (fresh && to_file) write_text(s.output, csv_line(*rows[next_commit], s.quantity) + "\n", std::ios::app);
            if (opts.on_row) opts.on_row(*rows[next_commit]);
            ++next_commit;
        }
    };

    // Rows kept from an earlier run must come before any new row to keep
    // the appended file in order; if they do not, the final rewrite below
    // restores the order.
    {
        std::lock_guard lock(mu);
        commit();
    }

    auto worker = [&] {
        for (;;) {
            std::size_t idx;
            {
                std::lock_guard lock(mu);
                if (failure || next_task >= pending.size()) return;
                idx = pending[next_task++];
            }
            try {
                SweepRow r = evaluate_row(s, s.grid[idx]);
                std::lock_guard lock(mu);
                rows[idx] = std::move(r);
                commit();
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(std::max<std::size_t>(pending.size(), 1))));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SweepRow> out;
    out.reserve(n);
    for (auto &r : rows) out.push_back(*r);
    if (to_file) emit_csv(out, s.output, s.quantity);
    return out;
}

// Figure presets ---------------------------------------------------------

namespace {

struct Preset {
    const char *variant;
    std::function<Scenario()> make;
};

Scenario base(const std::string &name, Family f, Quantity q, SweepAxis a, const std::string &grid) {
    Scenario s;
    s.name = name;
    s.family = f;
    s.quantity = q;
    s.axis = a;
    s.grid = parse_grid(grid);
    s.output = name + ".csv";
    return s;
}

const char *kAlphaGrid = "0.05:2.0:0.05";
const char *kTGrid = "0.5:0.99:0.01";

Scenario kim_t(const std::string &name, Quantity q, std::optional<GaussianVariances> v) {
    Scenario s = base(name, Family::Kim, q, SweepAxis::T, kTGrid);
    s.r = 0.3;
    s.variances = v;
    return s;
}

Scenario lossy_t(const std::string &name, Quantity q, double eps) {
    Scenario s = base(name, Family::Lossy, q, SweepAxis::T, kTGrid);
    s.r = 0.3;
    s.epsilon = eps;
    return s;
}

std::vector<Preset> presets(int n) {
    switch (n) {
        case 1:
            return {{"", [] { return base("fig1", Family::Psgs, Quantity::Fidelity, SweepAxis::Alpha, "0.01:2.5:0.01"); }}};
        case 2:
            return {
                {"a-psgs", [] { return base("fig2a-psgs", Family::Psgs, Quantity::Chsh, SweepAxis::Alpha, kAlphaGrid); }},
                {"a-scs", [] { return base("fig2a-scs", Family::Scs, Quantity::Chsh, SweepAxis::Alpha, kAlphaGrid); }},
                {"b-psgs", [] { return base("fig2b-psgs", Family::Psgs, Quantity::Ch, SweepAxis::Alpha, kAlphaGrid); }},
                {"b-scs", [] { return base("fig2b-scs", Family::Scs, Quantity::Ch, SweepAxis::Alpha, kAlphaGrid); }},
            };
        case 3:
            return {
                {"pure", [] { return kim_t("fig3-pure", Quantity::Chsh, std::nullopt); }},
                {"mixed", [] { return kim_t("fig3-mixed", Quantity::Chsh, GaussianVariances::from_db(2.65, -2.56)); }},
            };
        case 4:
            return {
                {"pure", [] { return kim_t("fig4-pure", Quantity::Ch, std::nullopt); }},
                {"mixed1.04", [] { return kim_t("fig4-mixed1.04", Quantity::Ch, GaussianVariances::from_db(2.69, -2.52)); }},
                {"mixed1.08", [] { return kim_t("fig4-mixed1.08", Quantity::Ch, GaussianVariances::from_db(2.78, -2.43)); }},
                {"experimental",
                 [] { return kim_t("fig4-experimental", Quantity::Ch, GaussianVariances::from_db(4.26, -3.57)); }},
            };
        case 5:
            return {
                {"eps1", [] { return lossy_t("fig5-eps1", Quantity::Chsh, 1.0); }},
                {"eps0.8", [] { return lossy_t("fig5-eps0.8", Quantity::Chsh, 0.8); }},
                {"eps0.6", [] { return lossy_t("fig5-eps0.6", Quantity::Chsh, 0.6); }},
            };
        case 6: {
            auto eps_axis = [](const char *name, double T) {
                Scenario s = base(name, Family::Lossy, Quantity::Ch, SweepAxis::Epsilon, "0.05:1.0:0.05");
                s.r = 0.3;
                s.T = T;
                return s;
            };
            return {
                {"eps1", [] { return lossy_t("fig6-eps1", Quantity::Ch, 1.0); }},
                {"eps0.8", [] { return lossy_t("fig6-eps0.8", Quantity::Ch, 0.8); }},
                {"eps0.6", [] { return lossy_t("fig6-eps0.6", Quantity::Ch, 0.6); }},
                {"T0.95", [eps_axis] { return eps_axis("fig6-T0.95", 0.95); }},
                {"T0.98", [eps_axis] { return eps_axis("fig6-T0.98", 0.98); }},
            };
        }
        case 7: {
            auto pm_axis = [](const char *name, double T) {
                Scenario s = base(name, Family::Lossy, Quantity::Ch, SweepAxis::Pm, "0.5:1.0:0.01");
                s.r = 0.3;
                s.T = T;
                s.epsilon = 0.6;
                return s;
            };
            return {
                {"T0.99", [pm_axis] { return pm_axis("fig7-T0.99", 0.99); }},
                {"T0.95", [pm_axis] { return pm_axis("fig7-T0.95", 0.95); }},
            };
        }
        default: throw ConfigError("unknown figure " + std::to_string(n) + " (expected 1..7)");
    }
}

}  // namespace

std::vector<std::string> figure_variants(int n) {
    std::vector<std::string> out;
    for (const auto &p : presets(n)) out.emplace_back(p.variant);
    return out;
}

Scenario figure(int n, const std::string &variant) {
    const auto ps = presets(n);
    if (variant.empty()) return ps.front().make();
    for (const auto &p : ps)
        if (variant == p.variant) return p.make();
    std::string allowed;
    for (const auto &p : ps) allowed += std::string(allowed.empty() ? "" : ", ") + p.variant;
    throw ConfigError("figure " + std::to_string(n) + ": unknown variant '" + variant + "' (expected " +
                      (allowed.empty() ? "none" : allowed) + ")");
}

}  // namespace cvbell
