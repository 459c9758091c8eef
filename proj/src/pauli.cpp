#include "qps/pauli.hpp"

#include <stdexcept>

namespace qps {
namespace {

// Symplectic bit pair (x, z) per letter: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
int x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y ? 1 : 0; }
int z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y ? 1 : 0; }

Pauli from_bits(int x, int z) {
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

std::string PauliString::str() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[((phase_power % 4) + 4) % 4];
    for (Pauli p : letters) out += pauli_char(p);
    return out;
}

PauliString PauliString::parse(std::string_view text) {
    PauliString out;
    if (text.starts_with("-i")) {
        out.phase_power = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("-")) {
        out.phase_power = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("i")) {
        out.phase_power = 1;
        text.remove_prefix(1);
    }
    if (text.empty()) throw std::invalid_argument("bad Pauli string: no letters");
    for (char c : text) {
        switch (c) {
            case 'I': out.letters.push_back(Pauli::I); break;
            case 'X': out.letters.push_back(Pauli::X); break;
            case 'Y': out.letters.push_back(Pauli::Y); break;
            case 'Z': out.letters.push_back(Pauli::Z); break;
            default:
                throw std::invalid_argument(std::string("bad Pauli string: letter '") + c + "'");
        }
    }
    return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (letters.size() != other.letters.size())
        throw std::invalid_argument("Pauli string length mismatch");
    int anti = 0;
    for (size_t i = 0; i < letters.size(); ++i) {
        const Pauli a = letters[i], b = other.letters[i];
        if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
    }
    return anti % 2 == 0;
}

bool PauliString::same_letters(const PauliString& other) const { return letters == other.letters; }

PauliString cnot_conjugate(PauliString p, const std::vector<CnotGate>& gates) {
    const int n = p.size();
    for (const CnotGate& g : gates) {
        if (g.control < 1 || g.control > n || g.target < 1 || g.target > n)
            throw std::invalid_argument("CNOT qubit index out of range");
        if (g.control == g.target) throw std::invalid_argument("CNOT control equals target");
        const size_t c = size_t(g.control - 1), t = size_t(g.target - 1);
        int xc = x_bit(p.letters[c]), zc = z_bit(p.letters[c]);
        int xt = x_bit(p.letters[t]), zt = z_bit(p.letters[t]);
        // Standard tableau update; the sign flips exactly for the
        // {XY, YX, YY, XZ...}-type overlaps captured by this product.
        if (xc & zt & (xt ^ zc ^ 1)) p.phase_power = (p.phase_power + 2) % 4;
        xt ^= xc;
        zc ^= zt;
        p.letters[c] = from_bits(xc, zc);
        p.letters[t] = from_bits(xt, zt);
    }
    return p;
}

std::vector<CnotGate> parse_cnot_list(std::string_view text, int qubit_count) {
    std::vector<CnotGate> gates;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            const size_t colon = item.find(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument("bad CNOT gate '" + std::string(item) +
                                            "': expected c:t");
            int c = 0, t = 0;
            try {
                c = std::stoi(std::string(item.substr(0, colon)));
                t = std::stoi(std::string(item.substr(colon + 1)));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad CNOT gate '" + std::string(item) + "'");
            }
            if (qubit_count > 0 && (c < 1 || c > qubit_count || t < 1 || t > qubit_count))
                throw std::invalid_argument("CNOT qubit index out of range");
            if (c == t) throw std::invalid_argument("CNOT control equals target");
            gates.push_back({c, t});
        }
        pos = end + 1;
    }
    return gates;
}

int phase_phi_power(const Gf2Field& f, GfElem alpha, GfElem beta) {
    const GfElem x = f.mul(alpha, beta);
    const int n = f.degree();
    // Frobenius powers x^{2^i}.
    std::vector<GfElem> sq(static_cast<size_t>(n));
    sq[0] = x;
    for (int i = 1; i < n; ++i) sq[size_t(i)] = f.mul(sq[size_t(i - 1)], sq[size_t(i - 1)]);
    GfElem fsum = f.zero();
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) fsum = f.add(fsum, f.mul(sq[size_t(i)], sq[size_t(j)]));
    if (fsum.bits > 1) throw std::logic_error("displacement phase function left GF(2)");
    return (f.trace(x) + 2 * int(fsum.bits)) % 4;
}

std::complex<double> phase_phi(const Gf2Field& f, GfElem alpha, GfElem beta) {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_phi_power(f, alpha, beta)];
}

PauliString displacement_string(const Gf2Field& f, const GfBasis& sd_basis, GfElem alpha,
                                GfElem beta) {
    if (!f.is_self_dual(sd_basis))
        throw std::invalid_argument("displacement_string requires self-dual basis");
    PauliString out;
    int y_count = 0;
    for (GfElem theta : sd_basis.elements) {
        const int a = f.trace(f.mul(alpha, theta));
        const int b = f.trace(f.mul(beta, theta));
        out.letters.push_back(from_bits(b, a));
        if (a && b) ++y_count;
    }
    // sigma_z sigma_x = i sigma_y at every (1,1) site; fold those factors
    // into the global phase so the dense product is exact.
    out.phase_power = (phase_phi_power(f, alpha, beta) + y_count) % 4;
    return out;
}

}  // namespace qps
