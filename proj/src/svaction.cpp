#include "tiso/svaction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tiso {

SuperVector SuperVector::shifted(Int c) const {
    SuperVector out = *this;
    for (Int& x : out.a) x += c;
    for (Int& x : out.b) x += c;
    return out;
}

std::string SuperVector::str() const {
    std::string out = "(";
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(a[t]);
    }
    out += "|";
    for (std::size_t t = 0; t < b.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(b[t]);
    }
    return out + ")";
}

Int pairing(const SuperVector& v, const Root& root) {
    Int value = v.a[root.i - 1] - v.b[root.j - 1];
    return root.sign == Sign::plus ? value : -value;
}

SuperVector nu_pow(const SuperVector& v, Int t) {
    const Int n = v.n();
    SuperVector out = v;
    for (Int i = 0; i < n; ++i) out.a[i] = v.a[mod_floor(i - t, n)];
    return out;
}

SuperVector eta_pow(const SuperVector& v, Int t) {
    const Int m = v.m();
    SuperVector out = v;
    for (Int j = 0; j < m; ++j) out.b[j] = v.b[mod_floor(j + t, m)];
    return out;
}

SuperVector rotate_nu(const SuperVector& v) { return nu_pow(v, 1); }
SuperVector rotate_nu_inv(const SuperVector& v) { return nu_pow(v, -1); }
SuperVector rotate_eta(const SuperVector& v) { return eta_pow(v, 1); }
SuperVector rotate_eta_inv(const SuperVector& v) { return eta_pow(v, -1); }

Kappa::Kappa(Int p_in, Int q_in, Sign sign_in) : p(p_in), q(q_in), sign(sign_in) {
    if (p < 1 || q < 1) throw std::invalid_argument("kappa needs p >= 1 and q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("kappa needs coprime p, q");
}

Kappa Kappa::parse(const std::string& text) {
    std::string body = text;
    Sign sign = Sign::plus;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        sign = body.front() == '-' ? Sign::minus : Sign::plus;
        body.erase(body.begin());
    }
    auto slash = body.find('/');
    try {
        std::size_t used = 0;
        Int p = std::stoll(slash == std::string::npos ? body : body.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? body.size() : slash))
            throw std::invalid_argument(text);
        Int q = 1;
        if (slash != std::string::npos) {
            q = std::stoll(body.substr(slash + 1), &used);
            if (used != body.size() - slash - 1) throw std::invalid_argument(text);
        }
        return {p, q, sign};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("kappa must look like \"-p/q\": " + text);
    }
}

std::string Kappa::str() const {
    return std::string(sign == Sign::minus ? "-" : "+") + std::to_string(p) + "/" +
           std::to_string(q);
}

bool on_hyperplane(const SuperVector& v, const Root& root, const Kappa& kappa) {
    Int value = v.a[root.i - 1] - v.b[root.j - 1];
    return root.sign == Sign::plus ? value == 0 : value == kappa.lower_threshold();
}

SuperVector apply_tau(const SuperVector& v, const Root& root, const Kappa& kappa) {
    if (!on_hyperplane(v, root, kappa))
        throw NotOnHyperplane(v.str() + " is not on the hyperplane of " + root.label());
    SuperVector out = v;
    Int dir = root.sign == Sign::plus ? 1 : -1;
    out.a[root.i - 1] += dir * kappa.q;
    out.b[root.j - 1] += dir * kappa.step_b();
    return out;
}

AugMatrix AugMatrix::of(const SuperVector& v) {
    AugMatrix out;
    out.left = v.a;
    out.top = v.b;
    out.core.assign(v.n(), std::vector<Int>(v.m()));
    for (int i = 0; i < v.n(); ++i)
        for (int j = 0; j < v.m(); ++j) out.core[i][j] = v.a[i] - v.b[j];
    return out;
}

std::vector<Root> AugMatrix::zero_boxes() const {
    std::vector<Root> out;
    for (int i = 1; i <= static_cast<int>(core.size()); ++i)
        for (int j = 1; j <= static_cast<int>(core[i - 1].size()); ++j)
            if (core[i - 1][j - 1] == 0) out.push_back({i, j, Sign::plus});
    return out;
}

std::string AugMatrix::text() const {
    std::size_t width = 1;
    auto widen = [&width](Int x) { width = std::max(width, std::to_string(x).size()); };
    for (Int x : left) widen(x);
    for (Int x : top) widen(x);
    for (const auto& row : core)
        for (Int x : row) widen(x);

    auto cell = [width](Int x) {
        std::string s = std::to_string(x);
        return std::string(width + 1 - s.size(), ' ') + s;
    };

    std::ostringstream out;
    out << std::string(width + 1, ' ') << " ||";
    for (Int x : top) out << cell(x);
    out << "\n" << std::string(width + 2, '=') << "++" << std::string((width + 1) * top.size(), '=') << "\n";
    for (std::size_t i = 0; i < core.size(); ++i) {
        out << cell(left[i]) << " ||";
        for (Int x : core[i]) out << cell(x);
        out << "\n";
    }
    return out.str();
}

SuperVector base_point(const RectConfig& rect) {
    SuperVector v;
    v.a.resize(rect.n());
    v.b.resize(rect.m());
    for (int i = 1; i <= rect.n(); ++i) v.a[i - 1] = Int{rect.m()} * (rect.n() - i);
    for (int j = 1; j <= rect.m(); ++j) v.b[j - 1] = Int{rect.n()} * (j - 1);
    return v;
}

SuperVector build_x(const Partition& lambda) {
    const RectConfig& rect = lambda.rect();
    rect.require_coprime();
    const Partition d = lambda.dual();
    SuperVector v = base_point(rect);
    for (int i = 1; i <= rect.n(); ++i) v.a[i - 1] += Int{rect.n()} * lambda.boxes_in_row(i);
    for (int j = 1; j <= rect.m(); ++j) v.b[j - 1] += Int{rect.m()} * d.part(j);
    return v;
}

SuperVector build_x_hat(const LabeledDiagram& s) {
    KSplit split = split_label(s.lambda.rect(), s.k);
    return eta_pow(nu_pow(build_x(s.lambda), -split.j), -split.i).shifted(s.k);
}

Partition recover_a(const RectConfig& rect, const SuperVector& v) {
    rect.require_coprime();
    if (v.n() != rect.n() || v.m() != rect.m())
        throw std::invalid_argument("supervector blocks do not match the rectangle");
    const AugMatrix aug = AugMatrix::of(v);
    const std::vector<Root> zeros = aug.zero_boxes();

    // Candidate diagrams; the degree functional pins the box count of any
    // genuine x-image, which the difference matrix alone cannot (it is blind
    // to constant shifts).
    std::vector<Partition> candidates = Partition::all(rect);
    if (auto deg = sv_degree(v); deg && *deg >= 0 && *deg <= Int{rect.n()} * rect.m()) {
        std::erase_if(candidates, [&](const Partition& p) { return p.size() != *deg; });
    }

    std::size_t best = 0;
    std::vector<Partition> tied;
    for (const Partition& p : candidates) {
        std::size_t supported = static_cast<std::size_t>(std::count_if(
            zeros.begin(), zeros.end(), [&p](const Root& z) { return p.is_corner(z); }));
        if (supported > best) {
            best = supported;
            tied.clear();
        }
        if (supported == best) tied.push_back(p);
    }

    // The supporting path is the highest one: keep containment-maximal
    // candidates only.
    std::vector<Partition> maximal;
    for (const Partition& p : tied) {
        bool dominated = std::any_of(tied.begin(), tied.end(), [&p](const Partition& q) {
            return !(q == p) && q.contains(p);
        });
        if (!dominated) maximal.push_back(p);
    }
    if (maximal.size() != 1)
        throw AmbiguousPath("no unique maximal supporting path for " + v.str());
    return maximal.front();
}

std::optional<Int> translation_offset(const SuperVector& x, const SuperVector& y) {
    if (x.n() != y.n() || x.m() != y.m() || x.n() == 0) return std::nullopt;
    Int c = x.a[0] - y.a[0];
    for (int i = 0; i < x.n(); ++i)
        if (x.a[i] - y.a[i] != c) return std::nullopt;
    for (int j = 0; j < x.m(); ++j)
        if (x.b[j] - y.b[j] != c) return std::nullopt;
    return c;
}

bool residue_complete(const SuperVector& v) {
    std::vector<bool> hit(v.n(), false);
    for (Int x : v.a) hit[mod_floor(x, v.n())] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) return false;
    hit.assign(v.m(), false);
    for (Int x : v.b) hit[mod_floor(x, v.m())] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

std::optional<Int> sv_degree(const SuperVector& v) {
    const Int n = v.n(), m = v.m();
    if (n == 0 || m == 0) return std::nullopt;
    Int num_a = 2 * std::accumulate(v.a.begin(), v.a.end(), Int{0}) - n * m * (n - 1);
    Int num_b = 2 * std::accumulate(v.b.begin(), v.b.end(), Int{0}) - n * m * (m - 1);
    if (num_a % (2 * n) != 0 || num_b % (2 * m) != 0) return std::nullopt;
    if (num_a / (2 * n) != num_b / (2 * m)) return std::nullopt;
    return num_a / (2 * n);
}

}  // namespace tiso
