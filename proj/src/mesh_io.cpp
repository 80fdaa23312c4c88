#include "dmc/mesh_io.hpp"

#include "dmc/errors.hpp"
#include "dmc/mesh_build.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace dmc {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line, const std::string& msg) {
    std::ostringstream os;
    os << path << ":" << line << ": " << msg;
    throw Error(ErrorCode::ParseError, os.str());
}

std::string base_name(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

} // namespace

Immersion load_mesh(const std::string& path) {
    const auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    for (auto& c : ext)
        c = static_cast<char>(std::tolower(c));
    if (ext == "off")
        return load_off(path);
    if (ext == "obj")
        return load_obj(path);
    throw Error(ErrorCode::IoError, "unsupported mesh extension '" + ext + "' (want .off/.obj)");
}

Immersion load_off(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);

    int lineno = 0;
    auto next_content_line = [&](std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            const auto pos = line.find('#');
            if (pos != std::string::npos)
                line.erase(pos);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    blank = false;
            if (!blank)
                return true;
        }
        return false;
    };

    std::string line;
    if (!next_content_line(line))
        parse_fail(path, lineno, "empty OFF file");
    {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag != "OFF")
            parse_fail(path, lineno, "expected OFF header, got '" + tag + "'");
    }
    if (!next_content_line(line))
        parse_fail(path, lineno, "missing OFF counts");
    long nv = 0, nf = 0, ne = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> nv >> nf >> ne))
            parse_fail(path, lineno, "malformed count line");
    }
    if (nv < 3 || nf < 1)
        parse_fail(path, lineno, "implausible vertex/face counts");

    Eigen::MatrixXd positions(nv, 3);
    for (long i = 0; i < nv; ++i) {
        if (!next_content_line(line))
            parse_fail(path, lineno, "unexpected end of file in vertex block");
        std::istringstream ss(line);
        double x, y, z;
        if (!(ss >> x >> y >> z))
            parse_fail(path, lineno, "malformed vertex line");
        positions.row(i) << x, y, z;
    }
    Eigen::MatrixXi triangles(nf, 3);
    for (long f = 0; f < nf; ++f) {
        if (!next_content_line(line))
            parse_fail(path, lineno, "unexpected end of file in face block");
        std::istringstream ss(line);
        int cnt;
        if (!(ss >> cnt))
            parse_fail(path, lineno, "malformed face line");
        if (cnt != 3)
            parse_fail(path, lineno, "only triangular faces are supported (got " +
                                         std::to_string(cnt) + "-gon)");
        int a, b, c;
        if (!(ss >> a >> b >> c))
            parse_fail(path, lineno, "malformed face indices");
        triangles.row(f) << a, b, c;
    }
    return build_mesh(positions, triangles, base_name(path));
}

Immersion load_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path);

    std::vector<Eigen::Vector3d> verts;
    std::vector<Eigen::Vector3i> faces;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto pos = line.find('#');
        if (pos != std::string::npos)
            line.erase(pos);
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag))
            continue;
        if (tag == "v") {
            double x, y, z;
            if (!(ss >> x >> y >> z))
                parse_fail(path, lineno, "malformed vertex record");
            verts.emplace_back(x, y, z);
        } else if (tag == "f") {
            int idx[3];
            for (int k = 0; k < 3; ++k) {
                std::string tok;
                if (!(ss >> tok))
                    parse_fail(path, lineno, "face needs 3 indices");
                // accept v, v/vt, v//vn forms; only the vertex index is used
                const auto slash = tok.find('/');
                if (slash != std::string::npos)
                    tok.erase(slash);
                try {
                    idx[k] = std::stoi(tok);
                } catch (const std::exception&) {
                    parse_fail(path, lineno, "bad face index '" + tok + "'");
                }
                if (idx[k] < 0)
                    parse_fail(path, lineno, "negative OBJ indices are not supported");
            }
            std::string extra;
            if (ss >> extra)
                parse_fail(path, lineno, "only triangular faces are supported");
            faces.emplace_back(idx[0] - 1, idx[1] - 1, idx[2] - 1);
        } else {
            parse_fail(path, lineno,
                       "unsupported record '" + tag + "' (only v and f are accepted)");
        }
    }
    if (verts.size() < 3 || faces.empty())
        parse_fail(path, lineno, "no usable vertex/face data");

    Eigen::MatrixXd positions(verts.size(), 3);
    for (size_t i = 0; i < verts.size(); ++i)
        positions.row(static_cast<long>(i)) = verts[i].transpose();
    Eigen::MatrixXi triangles(faces.size(), 3);
    for (size_t f = 0; f < faces.size(); ++f)
        triangles.row(static_cast<long>(f)) = faces[f].transpose();
    return build_mesh(positions, triangles, base_name(path));
}

void save_off(const Immersion& imm, const std::string& path) {
    if (imm.positions.cols() != 3)
        throw Error(ErrorCode::IoError, "OFF export needs 3-d positions");
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw Error(ErrorCode::IoError, "cannot write " + path);
    std::fprintf(f, "OFF\n%d %d 0\n", imm.num_vertices(), imm.num_triangles());
    for (int v = 0; v < imm.num_vertices(); ++v)
        std::fprintf(f, "%.17g %.17g %.17g\n", imm.positions(v, 0), imm.positions(v, 1),
                     imm.positions(v, 2));
    for (int t = 0; t < imm.num_triangles(); ++t)
        std::fprintf(f, "3 %d %d %d\n", imm.triangles(t, 0), imm.triangles(t, 1),
                     imm.triangles(t, 2));
    std::fclose(f);
}

} // namespace dmc
