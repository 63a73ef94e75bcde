#include "excidyn/scenario_io.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace excidyn {

using nlohmann::json;

namespace {

const char* cross_name(CrossConvention c) {
    return c == CrossConvention::direct_mirror ? "direct_mirror" : "conjugate_mirror";
}

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

json to_document(const Scenario& s) {
    json doc;
    doc["label"] = s.label;
    doc["dimer"] = {{"E", s.dimer.E}, {"eps", s.dimer.eps}, {"J", s.dimer.J},
                    {"F1", s.dimer.F1}, {"F2", s.dimer.F2}};
    doc["bath"] = {{"G", s.bath.G},
                   {"g1_ratio", complex_pair(s.bath.g1_ratio)},
                   {"g2_ratio", complex_pair(s.bath.g2_ratio)},
                   {"nB", s.bath.nB},
                   {"omega_ph", s.bath.omega_ph},
                   {"gamma_ph", s.bath.gamma_ph},
                   {"cross", cross_name(s.bath.cross)}};
    doc["pulse"] = {{"tau1", s.pulse.tau1}, {"tau2", s.pulse.tau2},
                    {"delta_prime", s.pulse.delta_prime}, {"t0", s.pulse.t0}};
    doc["noise"] = {{"ns", s.noise.ns}, {"gamma_s", s.noise.gamma_s},
                    {"omega_s", s.noise.omega_s}, {"anomalous_ns", s.noise.anomalous_ns}};
    doc["constants"] = {{"hbar", s.constants.hbar}};
    doc["numerics"] = {{"h", s.numerics.h},
                       {"end_time", s.numerics.end_time},
                       {"output_stride", s.numerics.output_stride},
                       {"positivity_threshold", s.numerics.positivity_threshold}};
    if (s.initial_state) doc["initial_state"] = *s.initial_state;
    return doc;
}

// Walks one section, recording problems instead of throwing.
class Reader {
public:
    Reader(const json& doc, std::string section, std::vector<std::string>& issues)
        : issues_(issues), section_(std::move(section)) {
        if (!doc.contains(section_)) {
            present_ = false;
            return;
        }
        node_ = &doc.at(section_);
        if (!node_->is_object()) {
            issues_.push_back(section_ + " must be an object");
            node_ = nullptr;
        }
    }

    bool present() const { return present_; }

    void number(const char* key, double& out, bool required) {
        seen_.insert(key);
        const json* v = find(key, required);
        if (!v) return;
        if (!v->is_number()) {
            issues_.push_back(path(key) + " must be a number");
            return;
        }
        out = v->get<double>();
    }

    void integer(const char* key, int& out, bool required) {
        seen_.insert(key);
        const json* v = find(key, required);
        if (!v) return;
        if (!v->is_number_integer()) {
            issues_.push_back(path(key) + " must be an integer");
            return;
        }
        out = v->get<int>();
    }

    void complex(const char* key, cplx& out, bool required) {
        seen_.insert(key);
        const json* v = find(key, required);
        if (!v) return;
        if (v->is_number()) {
            out = {v->get<double>(), 0.0};
            return;
        }
        if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
            issues_.push_back(path(key) + " must be a number or [re, im]");
            return;
        }
        out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
    }

    void cross(const char* key, CrossConvention& out) {
        seen_.insert(key);
        const json* v = find(key, false);
        if (!v) return;
        if (*v == "conjugate_mirror") {
            out = CrossConvention::conjugate_mirror;
        } else if (*v == "direct_mirror") {
            out = CrossConvention::direct_mirror;
        } else {
            issues_.push_back(path(key) + " must be \"conjugate_mirror\" or \"direct_mirror\"");
        }
    }

    // Call after all fields were requested.
    void reject_unknown() {
        if (!node_) return;
        for (const auto& item : node_->items()) {
            if (!seen_.count(item.key())) issues_.push_back("unknown key " + path(item.key().c_str()));
        }
    }

private:
    std::string path(const char* key) const { return section_ + "." + key; }

    const json* find(const char* key, bool required) {
        if (!node_) {
            if (required && present_) return nullptr;
            if (required) issues_.push_back("missing " + path(key));
            return nullptr;
        }
        auto it = node_->find(key);
        if (it == node_->end()) {
            if (required) issues_.push_back("missing " + path(key));
            return nullptr;
        }
        return &*it;
    }

    std::vector<std::string>& issues_;
    std::string section_;
    const json* node_{nullptr};
    bool present_{true};
    std::set<std::string> seen_;
};

Scenario from_document(const json& doc) {
    std::vector<std::string> issues;
    if (!doc.is_object()) throw ScenarioError({"scenario document must be a JSON object"});

    static const std::set<std::string> sections{"label",  "dimer",     "bath",     "pulse",
                                                "noise",  "constants", "numerics", "initial_state"};
    for (const auto& item : doc.items()) {
        if (!sections.count(item.key())) issues.push_back("unknown key " + item.key());
    }

    Scenario s;
    if (doc.contains("label")) {
        if (doc["label"].is_string()) {
            s.label = doc["label"].get<std::string>();
        } else {
            issues.push_back("label must be a string");
        }
    }

    Reader dimer(doc, "dimer", issues);
    dimer.number("E", s.dimer.E, false);
    dimer.number("eps", s.dimer.eps, true);
    dimer.number("J", s.dimer.J, true);
    dimer.number("F1", s.dimer.F1, true);
    dimer.number("F2", s.dimer.F2, true);
    dimer.reject_unknown();

    // Phonon-mode keys only matter once the bath couples.
    Reader bath(doc, "bath", issues);
    bath.number("G", s.bath.G, false);
    const bool coupled = s.bath.G != 0.0;
    bath.complex("g1_ratio", s.bath.g1_ratio, coupled);
    bath.complex("g2_ratio", s.bath.g2_ratio, coupled);
    bath.number("nB", s.bath.nB, coupled);
    bath.number("omega_ph", s.bath.omega_ph, coupled);
    bath.number("gamma_ph", s.bath.gamma_ph, coupled);
    bath.cross("cross", s.bath.cross);
    bath.reject_unknown();

    Reader pulse(doc, "pulse", issues);
    pulse.number("tau1", s.pulse.tau1, true);
    pulse.number("tau2", s.pulse.tau2, true);
    pulse.number("delta_prime", s.pulse.delta_prime, false);
    pulse.number("t0", s.pulse.t0, false);
    pulse.reject_unknown();

    Reader noise(doc, "noise", issues);
    noise.number("ns", s.noise.ns, false);
    noise.number("anomalous_ns", s.noise.anomalous_ns, false);
    const bool noisy = s.noise.ns != 0.0 || s.noise.anomalous_ns != 0.0;
    noise.number("gamma_s", s.noise.gamma_s, noisy);
    noise.number("omega_s", s.noise.omega_s, false);
    noise.reject_unknown();

    Reader constants(doc, "constants", issues);
    constants.number("hbar", s.constants.hbar, false);
    constants.reject_unknown();

    Reader numerics(doc, "numerics", issues);
    numerics.number("h", s.numerics.h, false);
    numerics.number("end_time", s.numerics.end_time, false);
    numerics.integer("output_stride", s.numerics.output_stride, false);
    numerics.number("positivity_threshold", s.numerics.positivity_threshold, false);
    numerics.reject_unknown();

    if (doc.contains("initial_state")) {
        const auto& v = doc["initial_state"];
        bool ok = v.is_array() && v.size() == 9;
        for (std::size_t i = 0; ok && i < 9; ++i) ok = v[i].is_number();
        if (ok) {
            std::array<double, 9> st{};
            for (std::size_t i = 0; i < 9; ++i) st[i] = v[i].get<double>();
            s.initial_state = st;
        } else {
            issues.push_back("initial_state must be an array of 9 numbers");
        }
    }

    // Range checks run on whatever was read; skip those about fields already reported missing.
    for (auto& issue : validate(s)) {
        const bool repeats = std::any_of(issues.begin(), issues.end(), [&](const std::string& known) {
            return known.rfind("missing ", 0) == 0 && issue.rfind(known.substr(8) + " ", 0) == 0;
        });
        if (!repeats) issues.push_back(std::move(issue));
    }
    if (!issues.empty()) throw ScenarioError(std::move(issues));
    return s;
}

}  // namespace

std::string scenario_to_json(const Scenario& scenario) {
    return to_document(scenario).dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError({std::string("JSON parse error: ") + e.what()});
    }
    return from_document(doc);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError({"cannot open scenario file " + path.string()});
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_json(buf.str());
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    write_file_atomic(path, scenario_to_json(scenario));
}

Scenario with_parameter(const Scenario& scenario, const std::string& dotted, double value) {
    json doc = to_document(scenario);
    json::json_pointer ptr;
    try {
        std::string pointer = "/" + dotted;
        for (auto& ch : pointer) {
            if (ch == '.') ch = '/';
        }
        ptr = json::json_pointer(pointer);
    } catch (const json::exception&) {
        throw ScenarioError({"unresolvable parameter path " + dotted});
    }
    if (!doc.contains(ptr) || !doc[ptr].is_number()) {
        throw ScenarioError({"unresolvable parameter path " + dotted});
    }
    if (doc[ptr].is_number_integer()) {
        doc[ptr] = static_cast<long long>(value);
    } else {
        doc[ptr] = value;
    }
    return from_document(doc);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    static std::atomic<unsigned> counter{0};
    auto tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp.string() + ": " + ec.message());
    }
}

}  // namespace excidyn
