#include "relaysched/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

#include "relaysched/util.hpp"

namespace relaysched {

namespace {

// Frequency response magnitudes of a tapped-delay-line draw: complex Gaussian
// taps with an exponential power profile truncated at the maximum delay
// spread, unit total mean power, evaluated at the N subcarrier frequencies.
void smallscale_gains(const ScenarioConfig& cfg, std::mt19937_64& rng, std::vector<double>& out) {
    const int n_sc = cfg.num_subcarriers;
    const int taps = cfg.num_taps;

    double spacing = cfg.subcarrier_spacing_hz;
    if (spacing <= 0.0) {
        spacing = cfg.max_delay_spread_s > 0.0
                      ? 1.0 / (cfg.max_delay_spread_s * n_sc)
                      : 0.0;
    }

    std::vector<double> delays(taps, 0.0);
    std::vector<double> powers(taps, 0.0);
    const double spread = cfg.max_delay_spread_s;
    const double decay = spread > 0.0 ? spread / 3.0 : 1.0;
    double total = 0.0;
    for (int l = 0; l < taps; ++l) {
        delays[l] = taps > 1 ? spread * l / (taps - 1) : 0.0;
        powers[l] = std::exp(-delays[l] / decay);
        total += powers[l];
    }
    for (double& p : powers) p /= total;

    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::complex<double>> tap(taps);
    for (int l = 0; l < taps; ++l) {
        const double scale = std::sqrt(powers[l] / 2.0);
        const double re = normal(rng);
        const double im = normal(rng);
        tap[l] = {scale * re, scale * im};
    }

    out.resize(n_sc);
    for (int n = 0; n < n_sc; ++n) {
        std::complex<double> h{0.0, 0.0};
        const double freq = n * spacing;
        for (int l = 0; l < taps; ++l) {
            const double phase = -2.0 * std::numbers::pi * freq * delays[l];
            h += tap[l] * std::complex<double>{std::cos(phase), std::sin(phase)};
        }
        out[n] = std::norm(h);
    }
}

}  // namespace

ChannelRealization ChannelRealization::generate(const ScenarioConfig& cfg,
                                                const NodeLayout& layout, std::mt19937_64& rng) {
    cfg.validate();
    if (static_cast<int>(layout.ms.size()) != cfg.num_ms ||
        static_cast<int>(layout.rs.size()) != cfg.num_rs)
        throw std::invalid_argument("layout does not match scenario dimensions");

    ChannelRealization real;
    real.num_ms_ = cfg.num_ms;
    real.num_rs_ = cfg.num_rs;
    real.num_sc_ = cfg.num_subcarriers;
    real.power_bs_ = db_to_linear(cfg.power_bs_db);
    real.power_rs_ = db_to_linear(cfg.power_rs_db);
    real.power_ms_ = db_to_linear(cfg.power_ms_db);
    real.strategy_ = cfg.relay_strategy;
    real.xi_ = cfg.xi;
    real.theta_ = cfg.theta;

    const double ref_dist =
        cfg.path_loss_ref_distance > 0.0 ? cfg.path_loss_ref_distance : cfg.cell_radius;
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> fading;

    auto fill_link = [&](const Vec2& a, const Vec2& b, const char* what, double* gains,
                         double* large_scale) {
        const double dist = distance(a, b);
        if (dist <= 0.0)
            throw DegenerateGeometryError(std::string("zero-distance link: ") + what);
        const double path_loss =
            cfg.path_loss_ref_gain * std::pow(dist / ref_dist, -cfg.path_loss_exponent);
        const double shadow = db_to_linear(cfg.shadowing_sigma_db * normal(rng));
        // A passive channel never amplifies: the large-scale term saturates
        // at the configured ceiling for short or favorably shadowed links.
        const double ls = std::min(cfg.path_loss_max_gain, path_loss * shadow);
        smallscale_gains(cfg, rng, fading);
        *large_scale = ls;
        for (int n = 0; n < cfg.num_subcarriers; ++n) gains[n] = ls * fading[n];
    };

    const int n_sc = cfg.num_subcarriers;
    real.gains_bs_ms_.resize(static_cast<std::size_t>(cfg.num_ms) * n_sc);
    real.gains_bs_rs_.resize(static_cast<std::size_t>(cfg.num_rs) * n_sc);
    real.gains_ms_rs_.resize(static_cast<std::size_t>(cfg.num_ms) * cfg.num_rs * n_sc);
    real.ls_bs_ms_.resize(cfg.num_ms);
    real.ls_bs_rs_.resize(cfg.num_rs);
    real.ls_ms_rs_.resize(static_cast<std::size_t>(cfg.num_ms) * cfg.num_rs);

    for (int k = 0; k < cfg.num_ms; ++k)
        fill_link(layout.bs, layout.ms[k], "bs-ms", &real.gains_bs_ms_[k * n_sc],
                  &real.ls_bs_ms_[k]);
    for (int r = 0; r < cfg.num_rs; ++r)
        fill_link(layout.bs, layout.rs[r], "bs-rs", &real.gains_bs_rs_[r * n_sc],
                  &real.ls_bs_rs_[r]);
    for (int k = 0; k < cfg.num_ms; ++k)
        for (int r = 0; r < cfg.num_rs; ++r)
            fill_link(layout.ms[k], layout.rs[r], "ms-rs",
                      &real.gains_ms_rs_[(static_cast<std::size_t>(k) * cfg.num_rs + r) * n_sc],
                      &real.ls_ms_rs_[static_cast<std::size_t>(k) * cfg.num_rs + r]);
    return real;
}

ChannelRealization ChannelRealization::from_tables(const ChannelTables& tables) {
    const int k = tables.num_ms, m = tables.num_rs, n = tables.num_subcarriers;
    if (k < 1 || m < 0 || n < 1) throw std::invalid_argument("bad table dimensions");
    if (static_cast<int>(tables.gains_bs_ms.size()) != k * n ||
        static_cast<int>(tables.gains_bs_rs.size()) != m * n ||
        static_cast<int>(tables.gains_ms_rs.size()) != k * m * n)
        throw std::invalid_argument("gain table sizes do not match dimensions");

    ChannelRealization real;
    real.num_ms_ = k;
    real.num_rs_ = m;
    real.num_sc_ = n;
    real.power_bs_ = db_to_linear(tables.power_bs_db);
    real.power_rs_ = db_to_linear(tables.power_rs_db);
    real.power_ms_ = db_to_linear(tables.power_ms_db);
    real.strategy_ = tables.strategy;
    real.xi_ = tables.xi;
    real.theta_ = tables.theta;
    real.gains_bs_ms_ = tables.gains_bs_ms;
    real.gains_bs_rs_ = tables.gains_bs_rs;
    real.gains_ms_rs_ = tables.gains_ms_rs;

    auto mean_per_link = [n](const std::vector<double>& gains, std::vector<double>& out) {
        out.resize(gains.size() / n);
        for (std::size_t link = 0; link < out.size(); ++link) {
            double total = 0.0;
            for (int i = 0; i < n; ++i) total += gains[link * n + i];
            out[link] = total / n;
        }
    };
    mean_per_link(real.gains_bs_ms_, real.ls_bs_ms_);
    mean_per_link(real.gains_bs_rs_, real.ls_bs_rs_);
    mean_per_link(real.gains_ms_rs_, real.ls_ms_rs_);
    return real;
}

double ChannelRealization::tx_power(NodeKind kind) const {
    switch (kind) {
        case NodeKind::Bs: return power_bs_;
        case NodeKind::Rs: return power_rs_;
        case NodeKind::Ms: return power_ms_;
    }
    return 0.0;
}

const double* ChannelRealization::link_gains(NodeRef a, NodeRef b) const {
    if (a.kind == b.kind) throw std::invalid_argument("no such link: endpoints of equal kind");
    // Normalize so that a.kind < b.kind in the order BS < RS < MS.
    if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) std::swap(a, b);
    auto check = [](int idx, int count, const char* what) {
        if (idx < 0 || idx >= count)
            throw std::invalid_argument(std::string("bad node index for ") + what);
    };
    if (a.kind == NodeKind::Bs && b.kind == NodeKind::Ms) {
        check(b.index, num_ms_, "ms");
        return &gains_bs_ms_[static_cast<std::size_t>(b.index) * num_sc_];
    }
    if (a.kind == NodeKind::Bs && b.kind == NodeKind::Rs) {
        check(b.index, num_rs_, "rs");
        return &gains_bs_rs_[static_cast<std::size_t>(b.index) * num_sc_];
    }
    // RS-MS
    check(a.index, num_rs_, "rs");
    check(b.index, num_ms_, "ms");
    return &gains_ms_rs_[(static_cast<std::size_t>(b.index) * num_rs_ + a.index) * num_sc_];
}

double ChannelRealization::link_large_scale(NodeRef a, NodeRef b) const {
    if (a.kind == b.kind) throw std::invalid_argument("no such link: endpoints of equal kind");
    if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) std::swap(a, b);
    if (a.kind == NodeKind::Bs && b.kind == NodeKind::Ms) return ls_bs_ms_.at(b.index);
    if (a.kind == NodeKind::Bs && b.kind == NodeKind::Rs) return ls_bs_rs_.at(b.index);
    return ls_ms_rs_.at(static_cast<std::size_t>(b.index) * num_rs_ + a.index);
}

void ChannelRealization::check_subcarrier(int n) const {
    if (n < 0 || n >= num_sc_) throw std::invalid_argument("subcarrier index out of range");
}

double ChannelRealization::gain(NodeRef a, NodeRef b, int n) const {
    check_subcarrier(n);
    return link_gains(a, b)[n];
}

double ChannelRealization::large_scale(NodeRef a, NodeRef b) const {
    return link_large_scale(a, b);
}

double ChannelRealization::snr(NodeRef from, NodeRef to, int n) const {
    check_subcarrier(n);
    return tx_power(from.kind) * link_gains(from, to)[n];
}

void ChannelRealization::dump_csv(std::ostream& out) const {
    out << "link,a_index,b_index,subcarrier,gain\n";
    auto rows = [&](const char* name, int a_idx, int b_idx, const double* gains) {
        for (int n = 0; n < num_sc_; ++n)
            out << name << ',' << a_idx << ',' << b_idx << ',' << n + 1 << ','
                << format_double(gains[n], 17) << '\n';
    };
    for (int k = 0; k < num_ms_; ++k)
        rows("bs-ms", 1, k + 1, &gains_bs_ms_[static_cast<std::size_t>(k) * num_sc_]);
    for (int r = 0; r < num_rs_; ++r)
        rows("bs-rs", 1, r + 1, &gains_bs_rs_[static_cast<std::size_t>(r) * num_sc_]);
    for (int k = 0; k < num_ms_; ++k)
        for (int r = 0; r < num_rs_; ++r)
            rows("ms-rs", k + 1, r + 1,
                 &gains_ms_rs_[(static_cast<std::size_t>(k) * num_rs_ + r) * num_sc_]);
}

}  // namespace relaysched
