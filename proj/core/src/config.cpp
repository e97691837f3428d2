#include "qdf/config.hpp"

#include <cctype>
#include <cmath>

#include "qdf/errors.hpp"

namespace qdf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw config_error("config: " + path + ": " + what);
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void check_allowed(const json& obj, const std::string& path,
                   std::initializer_list<const char*> keys) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : keys) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
}

double get_number(const json& obj, const std::string& path, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

std::optional<double> get_opt_number(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

std::size_t get_count(const json& obj, const std::string& path, const char* key,
                      std::size_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail(path + "." + key, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

void parse_grid(const json& j, RunConfig& cfg) {
    require_object(j, "grid");
    check_allowed(j, "grid", {"n", "x_min", "dx"});
    cfg.grid_n = get_count(j, "grid", "n", cfg.grid_n);
    cfg.grid_dx = get_number(j, "grid", "dx", cfg.grid_dx);
    cfg.grid_x_min = get_opt_number(j, "grid", "x_min");
}

void parse_droplet(const json& j, RunConfig& cfg) {
    require_object(j, "droplet");
    check_allowed(j, "droplet", {"N", "mu_ratio", "G1", "G2", "convention"});
    const auto n = get_opt_number(j, "droplet", "N");
    const auto r = get_opt_number(j, "droplet", "mu_ratio");
    if (n && r) fail("droplet", "give exactly one of N and mu_ratio, not both");
    if (n) {
        cfg.droplet_norm = n;
        cfg.droplet_mu_ratio.reset();
    } else if (r) {
        cfg.droplet_mu_ratio = r;
        cfg.droplet_norm.reset();
    }
    cfg.G1 = get_number(j, "droplet", "G1", cfg.G1);
    cfg.G2 = get_number(j, "droplet", "G2", cfg.G2);
    const std::string conv = get_string(j, "droplet", "convention",
                                        cfg.convention == KineticConvention::HalfLaplacian
                                            ? "half"
                                            : "full");
    if (conv == "half") {
        cfg.convention = KineticConvention::HalfLaplacian;
    } else if (conv == "full") {
        cfg.convention = KineticConvention::FullLaplacian;
    } else {
        fail("droplet.convention", "expected \"half\" or \"full\"");
    }
}

void parse_potential(const json& j, RunConfig& cfg) {
    require_object(j, "potential");
    check_allowed(j, "potential", {"variant", "a", "alpha", "omega", "zero_initial_offset"});
    // variant may be inferred from the keys present; an explicit variant
    // conflicts with keys it cannot use
    std::string inferred = "free";
    if (j.contains("alpha") || j.contains("omega")) {
        inferred = "modulated";
    } else if (j.contains("a")) {
        inferred = "constant";
    }
    const std::string variant = get_string(j, "potential", "variant", inferred);
    PotentialSpec spec;
    if (variant == "free") {
        spec.variant = TrapVariant::FreeSpace;
        for (const char* k : {"a", "alpha", "omega", "zero_initial_offset"}) {
            if (j.contains(k)) {
                fail(std::string("potential.") + k, "not applicable to potential.variant=free");
            }
        }
    } else if (variant == "constant") {
        spec.variant = TrapVariant::ConstantLinear;
        for (const char* k : {"alpha", "omega", "zero_initial_offset"}) {
            if (j.contains(k)) {
                fail(std::string("potential.") + k, "not applicable to potential.variant=constant");
            }
        }
        spec.a = get_number(j, "potential", "a", 0.0);
    } else if (variant == "modulated") {
        spec.variant = TrapVariant::ModulatedLinear;
        spec.a = get_number(j, "potential", "a", 0.0);
        spec.alpha = get_number(j, "potential", "alpha", 0.0);
        spec.omega = get_number(j, "potential", "omega", 0.0);
        spec.zero_initial_offset = get_bool(j, "potential", "zero_initial_offset", true);
    } else {
        fail("potential.variant", "expected \"free\", \"constant\" or \"modulated\"");
    }
    spec.validate();
    cfg.potential = spec;
}

void parse_evolution(const json& j, RunConfig& cfg) {
    require_object(j, "evolution");
    check_allowed(j, "evolution", {"dt", "n_steps", "record_every", "snapshots"});
    cfg.dt = get_number(j, "evolution", "dt", cfg.dt);
    cfg.n_steps = get_count(j, "evolution", "n_steps", cfg.n_steps);
    cfg.record_every = get_count(j, "evolution", "record_every", cfg.record_every);
    cfg.store_snapshots = get_bool(j, "evolution", "snapshots", cfg.store_snapshots);
}

void parse_diagnostics(const json& j, RunConfig& cfg) {
    require_object(j, "diagnostics");
    check_allowed(j, "diagnostics", {"wigner", "entropy", "probes"});
    if (j.contains("wigner")) {
        const json& w = j.at("wigner");
        require_object(w, "diagnostics.wigner");
        check_allowed(w, "diagnostics.wigner", {"time", "p_min", "p_max", "n_p"});
        cfg.wigner_time = get_number(w, "diagnostics.wigner", "time", cfg.wigner_time);
        cfg.wigner_p_min = get_opt_number(w, "diagnostics.wigner", "p_min");
        cfg.wigner_p_max = get_opt_number(w, "diagnostics.wigner", "p_max");
        cfg.wigner_n_p = get_count(w, "diagnostics.wigner", "n_p", cfg.wigner_n_p);
    }
    if (j.contains("entropy")) {
        const json& e = j.at("entropy");
        require_object(e, "diagnostics.entropy");
        check_allowed(e, "diagnostics.entropy", {"normalized", "window_lo", "window_hi"});
        cfg.entropy_normalized = get_bool(e, "diagnostics.entropy", "normalized",
                                          cfg.entropy_normalized);
        cfg.entropy_window_lo = get_opt_number(e, "diagnostics.entropy", "window_lo");
        cfg.entropy_window_hi = get_opt_number(e, "diagnostics.entropy", "window_hi");
    }
    if (j.contains("probes")) {
        const json& p = j.at("probes");
        if (!p.is_array()) fail("diagnostics.probes", "expected an array of numbers");
        cfg.probes.clear();
        for (const auto& v : p) {
            if (!v.is_number()) fail("diagnostics.probes", "expected an array of numbers");
            cfg.probes.push_back(v.get<double>());
        }
    }
}

void parse_noise(const json& j, RunConfig& cfg) {
    require_object(j, "noise");
    check_allowed(j, "noise", {"fraction", "n_realizations", "scale", "distribution"});
    cfg.noise_fraction = get_number(j, "noise", "fraction", cfg.noise_fraction);
    cfg.noise_realizations = get_count(j, "noise", "n_realizations", cfg.noise_realizations);
    const std::string scale = get_string(j, "noise", "scale", "amplitude");
    if (scale == "amplitude") {
        cfg.noise_scale = NoiseScale::Amplitude;
    } else if (scale == "density") {
        cfg.noise_scale = NoiseScale::Density;
    } else {
        fail("noise.scale", "expected \"amplitude\" or \"density\"");
    }
    const std::string dist = get_string(j, "noise", "distribution", "uniform");
    if (dist == "uniform") {
        cfg.noise_distribution = NoiseDistribution::UniformReal;
    } else if (dist == "gaussian") {
        cfg.noise_distribution = NoiseDistribution::GaussianComplex;
    } else {
        fail("noise.distribution", "expected \"uniform\" or \"gaussian\"");
    }
}

}  // namespace

RunConfig parse_config_json(const json& doc) {
    require_object(doc, "<root>");
    check_allowed(doc, "", {"grid", "droplet", "potential", "evolution", "diagnostics", "noise",
                            "output_dir", "seed"});
    RunConfig cfg;
    if (doc.contains("grid")) parse_grid(doc.at("grid"), cfg);
    if (doc.contains("droplet")) parse_droplet(doc.at("droplet"), cfg);
    if (doc.contains("potential")) parse_potential(doc.at("potential"), cfg);
    if (doc.contains("evolution")) parse_evolution(doc.at("evolution"), cfg);
    if (doc.contains("diagnostics")) parse_diagnostics(doc.at("diagnostics"), cfg);
    if (doc.contains("noise")) parse_noise(doc.at("noise"), cfg);
    cfg.output_dir = get_string(doc, "<root>", "output_dir", cfg.output_dir);
    if (doc.contains("seed")) {
        const json& s = doc.at("seed");
        if (!s.is_number_integer() && !s.is_number_unsigned()) fail("seed", "expected an integer");
        cfg.seed = s.get<std::uint64_t>();
    }

    // re-validate the cross-module invariants at load time
    const auto grid = cfg.make_spatial_grid();
    cfg.resolve_droplet();
    cfg.evolution_config().validate();
    cfg.noise_spec().validate();
    for (double probe : cfg.probes) {
        if (!grid->contains(probe)) {
            fail("diagnostics.probes", "probe x=" + std::to_string(probe) + " outside the grid [" +
                                           std::to_string(grid->x_min()) + ", " +
                                           std::to_string(grid->x_max()) + "]");
        }
    }
    return cfg;
}

RunConfig parse_config(const std::string& text) {
    std::string trimmed;
    for (char c : text) {
        if (!trimmed.empty() || !std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty()) return parse_config_json(json::object());
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("config: malformed JSON document: ") + e.what());
    }
    return parse_config_json(doc);
}

void apply_override(json& doc, const std::string& dotted_key, const std::string& value) {
    if (dotted_key.empty()) throw config_error("config: empty override key");
    json* node = &doc;
    std::size_t start = 0;
    for (;;) {
        const std::size_t dot = dotted_key.find('.', start);
        const std::string part = dotted_key.substr(start, dot - start);
        if (part.empty()) throw config_error("config: bad override key '" + dotted_key + "'");
        if (dot == std::string::npos) {
            json parsed;
            try {
                parsed = json::parse(value);
            } catch (const json::exception&) {
                parsed = value;  // bare strings are allowed unquoted
            }
            (*node)[part] = parsed;
            return;
        }
        if (!node->contains(part) || !(*node)[part].is_object()) (*node)[part] = json::object();
        node = &(*node)[part];
        start = dot + 1;
    }
}

std::shared_ptr<const SpatialGrid> RunConfig::make_spatial_grid() const {
    const double x_min = grid_x_min ? *grid_x_min
                                    : -0.5 * static_cast<double>(grid_n) * grid_dx;
    return std::make_shared<const SpatialGrid>(make_grid(grid_n, x_min, grid_dx));
}

DropletParams RunConfig::resolve_droplet() const {
    // figure-parameter adapter: figure captions quote G1 = -1 and mu = mu0; the
    // canonical convention wants positive couplings and the same flat-top
    // ratio, so magnitudes are taken here.
    const double g1 = std::abs(G1);
    const double g2 = std::abs(G2);
    if (!(g1 > 0.0) || !(g2 > 0.0)) throw config_error("config: droplet couplings must be nonzero");
    if (droplet_mu_ratio) {
        return DropletParams::from_mu_ratio(std::abs(*droplet_mu_ratio), g1, g2, convention);
    }
    const double n = droplet_norm.value_or(1.0);
    return DropletParams::from_norm(n, g1, g2, convention);
}

DropletState RunConfig::resolve_state() const {
    return DropletState::make(resolve_droplet(), potential);
}

EvolutionConfig RunConfig::evolution_config() const {
    EvolutionConfig cfg;
    cfg.dt = dt;
    cfg.n_steps = n_steps;
    cfg.record_every = record_every;
    const EgpeCouplings g = egpe_couplings(resolve_droplet());
    cfg.g1 = g.g1;
    cfg.g2 = g.g2;
    return cfg;
}

NoiseSpec RunConfig::noise_spec() const {
    NoiseSpec spec;
    spec.fraction = noise_fraction;
    spec.seed = seed;
    spec.n_realizations = noise_realizations;
    spec.scale = noise_scale;
    spec.distribution = noise_distribution;
    return spec;
}

nlohmann::json RunConfig::to_json() const {
    json doc;
    doc["grid"] = {{"n", grid_n}, {"dx", grid_dx}};
    doc["grid"]["x_min"] = grid_x_min ? *grid_x_min : -0.5 * static_cast<double>(grid_n) * grid_dx;

    json droplet;
    if (droplet_mu_ratio) {
        droplet["mu_ratio"] = *droplet_mu_ratio;
    } else {
        droplet["N"] = droplet_norm.value_or(1.0);
    }
    droplet["G1"] = G1;
    droplet["G2"] = G2;
    droplet["convention"] = convention == KineticConvention::HalfLaplacian ? "half" : "full";
    doc["droplet"] = droplet;

    json pot;
    switch (potential.variant) {
        case TrapVariant::FreeSpace:
            pot["variant"] = "free";
            break;
        case TrapVariant::ConstantLinear:
            pot["variant"] = "constant";
            pot["a"] = potential.a;
            break;
        case TrapVariant::ModulatedLinear:
            pot["variant"] = "modulated";
            pot["a"] = potential.a;
            pot["alpha"] = potential.alpha;
            pot["omega"] = potential.omega;
            pot["zero_initial_offset"] = potential.zero_initial_offset;
            break;
    }
    doc["potential"] = pot;

    doc["evolution"] = {{"dt", dt},
                        {"n_steps", n_steps},
                        {"record_every", record_every},
                        {"snapshots", store_snapshots}};

    json diag;
    diag["wigner"] = {{"time", wigner_time}, {"n_p", wigner_n_p}};
    if (wigner_p_min) diag["wigner"]["p_min"] = *wigner_p_min;
    if (wigner_p_max) diag["wigner"]["p_max"] = *wigner_p_max;
    diag["entropy"] = {{"normalized", entropy_normalized}};
    if (entropy_window_lo) diag["entropy"]["window_lo"] = *entropy_window_lo;
    if (entropy_window_hi) diag["entropy"]["window_hi"] = *entropy_window_hi;
    diag["probes"] = probes;
    doc["diagnostics"] = diag;

    doc["noise"] = {{"fraction", noise_fraction},
                    {"n_realizations", noise_realizations},
                    {"scale", noise_scale == NoiseScale::Amplitude ? "amplitude" : "density"},
                    {"distribution", noise_distribution == NoiseDistribution::UniformReal
                                         ? "uniform"
                                         : "gaussian"}};

    doc["output_dir"] = output_dir;
    doc["seed"] = seed;
    return doc;
}

}  // namespace qdf
