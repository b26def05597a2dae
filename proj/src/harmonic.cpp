#include "trigbs/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "trigbs/series_eval.hpp"

namespace trigbs {

namespace {

constexpr double kDropThreshold = 1e-300;

// Dense evaluation pays off once the series fills a decent fraction of
// 1..max_freq; tiny or very sparse series go through direct per-term sums.
bool use_dense_path(std::size_t terms, std::uint32_t max_freq) {
    if (terms < 32) return false;
    return static_cast<std::size_t>(max_freq) <= 8 * terms;
}

void eval_sparse(const HarmonicSeries& s, std::span<const double> t,
                 std::span<double> out) {
    for (std::size_t p = 0; p < t.size(); ++p) {
        const double tr = kernels::reduce_angle(t[p]);
        double acc = 0.5 * s.const_coeff();
        for (std::size_t i = 0; i < s.term_count(); ++i) {
            double c, sn;
            kernels::sincos_phase(s.freqs()[i], tr, c, sn);
            acc += s.cos_amps()[i] * c + s.sin_amps()[i] * sn;
        }
        out[p] = acc;
    }
}

}  // namespace

HarmonicSeries::HarmonicSeries(double const_coeff, std::vector<Term> terms)
    : const_coeff_(const_coeff) {
    if (!std::isfinite(const_coeff))
        fail(ErrorCode::non_finite_value, "constant coefficient must be finite");
    for (const Term& t : terms) {
        if (t.freq < 1) fail(ErrorCode::bad_format, "term frequency must be >= 1");
        if (!std::isfinite(t.cos_amp) || !std::isfinite(t.sin_amp))
            fail(ErrorCode::non_finite_value, "term amplitude must be finite");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.freq < y.freq; });
    freq_.reserve(terms.size());
    cos_amp_.reserve(terms.size());
    sin_amp_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        const std::uint32_t w = terms[i].freq;
        double c = 0.0, s = 0.0;
        for (; i < terms.size() && terms[i].freq == w; ++i) {
            c += terms[i].cos_amp;
            s += terms[i].sin_amp;
        }
        if (std::abs(c) < kDropThreshold && std::abs(s) < kDropThreshold) continue;
        freq_.push_back(w);
        cos_amp_.push_back(c);
        sin_amp_.push_back(s);
    }
}

HarmonicSeries::Term HarmonicSeries::term(std::uint32_t freq) const {
    auto it = std::lower_bound(freq_.begin(), freq_.end(), freq);
    if (it == freq_.end() || *it != freq) return {freq, 0.0, 0.0};
    const std::size_t i = static_cast<std::size_t>(it - freq_.begin());
    return {freq, cos_amp_[i], sin_amp_[i]};
}

double HarmonicSeries::eval(double t) const {
    double out;
    eval_many(std::span<const double>(&t, 1), std::span<double>(&out, 1));
    return out;
}

void HarmonicSeries::eval_many(std::span<const double> t, std::span<double> out) const {
    if (t.size() != out.size())
        fail(ErrorCode::length_mismatch, "eval_many output size mismatch");
    if (freq_.empty()) {
        std::fill(out.begin(), out.end(), 0.5 * const_coeff_);
        return;
    }
    if (!use_dense_path(term_count(), max_freq())) {
        eval_sparse(*this, t, out);
        return;
    }
    std::vector<double> dense_cos(max_freq(), 0.0);
    std::vector<double> dense_sin(max_freq(), 0.0);
    for (std::size_t i = 0; i < freq_.size(); ++i) {
        dense_cos[freq_[i] - 1] = cos_amp_[i];
        dense_sin[freq_[i] - 1] = sin_amp_[i];
    }
    kernels::DenseSeries view{const_coeff_, dense_cos, dense_sin};
    kernels::dispatch()(view, t, out);
}

double HarmonicSeries::integrate_period() const noexcept {
    return std::numbers::pi * const_coeff_;
}

std::string HarmonicSeries::to_json() const {
    nlohmann::json j;
    j["const"] = const_coeff_;
    auto& terms = j["terms"] = nlohmann::json::array();
    for (std::size_t i = 0; i < freq_.size(); ++i)
        terms.push_back({freq_[i], cos_amp_[i], sin_amp_[i]});
    return j.dump();
}

HarmonicSeries HarmonicSeries::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("const") || !j.contains("terms") ||
        !j["const"].is_number() || !j["terms"].is_array())
        fail(ErrorCode::bad_format, "series JSON must be {\"const\": a0, \"terms\": [[w,c,s],...]}");
    std::vector<Term> terms;
    for (const auto& e : j["terms"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
            !e[1].is_number() || !e[2].is_number())
            fail(ErrorCode::bad_format, "series term must be [freq, cos_amp, sin_amp]");
        terms.push_back({e[0].get<std::uint32_t>(), e[1].get<double>(), e[2].get<double>()});
    }
    return HarmonicSeries(j["const"].get<double>(), std::move(terms));
}

HarmonicSeries convolve(const HarmonicSeries& a, const HarmonicSeries& b) {
    const double pi = std::numbers::pi;
    std::vector<HarmonicSeries::Term> terms;
    auto fa = a.freqs(), fb = b.freqs();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i] < fb[j]) { ++i; continue; }
        if (fb[j] < fa[i]) { ++j; continue; }
        const double ac = a.cos_amps()[i], as = a.sin_amps()[i];
        const double bc = b.cos_amps()[j], bs = b.sin_amps()[j];
        terms.push_back({fa[i], pi * (ac * bc - as * bs), pi * (ac * bs + as * bc)});
        ++i;
        ++j;
    }
    return HarmonicSeries(pi * a.const_coeff() * b.const_coeff(), std::move(terms));
}

HarmonicSeries shift(const HarmonicSeries& f, double s) {
    const double sr = kernels::reduce_angle(s);
    std::vector<HarmonicSeries::Term> terms;
    terms.reserve(f.term_count());
    for (std::size_t i = 0; i < f.term_count(); ++i) {
        double cs, sn;
        kernels::sincos_phase(f.freqs()[i], sr, cs, sn);
        const double c = f.cos_amps()[i], si = f.sin_amps()[i];
        terms.push_back({f.freqs()[i], c * cs + si * sn, si * cs - c * sn});
    }
    return HarmonicSeries(f.const_coeff(), std::move(terms));
}

HarmonicSeries linear_combine(std::span<const ScaledSeries> parts) {
    double const_coeff = 0.0;
    std::vector<HarmonicSeries::Term> terms;
    for (const ScaledSeries& p : parts) {
        const_coeff += p.weight * p.series->const_coeff();
        for (std::size_t i = 0; i < p.series->term_count(); ++i)
            terms.push_back({p.series->freqs()[i],
                             p.weight * p.series->cos_amps()[i],
                             p.weight * p.series->sin_amps()[i]});
    }
    return HarmonicSeries(const_coeff, std::move(terms));
}

double sup_diff(const HarmonicSeries& a, const HarmonicSeries& b, int samples) {
    if (samples < 2) fail(ErrorCode::insufficient_points, "sup_diff needs >= 2 samples");
    const ScaledSeries parts[] = {{1.0, &a}, {-1.0, &b}};
    const HarmonicSeries diff = linear_combine(parts);
    std::vector<double> t(static_cast<size_t>(samples));
    std::vector<double> v(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i)
        t[static_cast<size_t>(i)] = 2.0 * std::numbers::pi * i / samples;
    diff.eval_many(t, v);
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    return mx;
}

}  // namespace trigbs
