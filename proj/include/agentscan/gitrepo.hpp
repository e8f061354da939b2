#pragma once

#include <cerrno>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include "agentscan/commitscan.hpp"
#include "agentscan/treescan.hpp"

namespace agentscan {

class GitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs a command without a shell, capturing stdout and stderr. Output may
// contain NUL bytes (git -z records).
inline CommandResult run_command(const std::vector<std::string>& argv) {
    if (argv.empty()) throw GitError("empty command");

    int out_pipe[2], err_pipe[2];
    if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) throw GitError("pipe() failed");

    pid_t pid = fork();
    if (pid < 0) throw GitError("fork() failed");
    if (pid == 0) {
        dup2(out_pipe[1], STDOUT_FILENO);
        dup2(err_pipe[1], STDERR_FILENO);
        close(out_pipe[0]);
        close(out_pipe[1]);
        close(err_pipe[0]);
        close(err_pipe[1]);
        std::vector<char*> args;
        args.reserve(argv.size() + 1);
        for (const std::string& a : argv) args.push_back(const_cast<char*>(a.c_str()));
        args.push_back(nullptr);
        execvp(args[0], args.data());
        std::perror("execvp");
        _exit(127);
    }

    close(out_pipe[1]);
    close(err_pipe[1]);
    CommandResult result;
    auto drain = [](int fd, std::string& sink) {
        char buf[4096];
        ssize_t n;
        while ((n = read(fd, buf, sizeof(buf))) > 0) sink.append(buf, static_cast<size_t>(n));
    };
    // Drain stdout fully first; git's stderr output is small and fits the pipe.
    drain(out_pipe[0], result.out);
    drain(err_pipe[0], result.err);
    close(out_pipe[0]);
    close(err_pipe[0]);

    int status = 0;
    waitpid(pid, &status, 0);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Adapter over a local repository. All repository access funnels through the
// version-control tool's machine-readable output; nothing else in the library
// touches the working tree.
class GitRepo {
  public:
    explicit GitRepo(std::string path) : path_(std::move(path)) {}

    const std::string& path() const { return path_; }

    bool is_repository() const {
        return git({"rev-parse", "--git-dir"}).exit_code == 0;
    }

    bool has_commits() const {
        return git({"rev-parse", "--verify", "--quiet", "HEAD"}).exit_code == 0;
    }

    // Every commit reachable from HEAD, via NUL-delimited records with
    // unit-separator-delimited fields.
    std::vector<CommitRecord> load_commits() const {
        if (!has_commits()) return {};
        CommandResult r = git({"log", "HEAD", "-z",
                               "--format=%H%x1f%an%x1f%ae%x1f%cn%x1f%ce%x1f%at%x1f%P%x1f%B"});
        if (r.exit_code != 0) throw GitError("git log failed: " + r.err);

        std::vector<CommitRecord> commits;
        for (const std::string& record : split(r.out, '\0')) {
            if (record.empty()) continue;
            std::vector<std::string> fields = split(record, '\x1f');
            if (fields.size() < 8) continue;
            CommitRecord c;
            c.hash = fields[0];
            c.author = {fields[1], fields[2]};
            c.committer = {fields[3], fields[4]};
            c.timestamp = std::atoll(fields[5].c_str());
            for (const std::string& p : split(fields[6], ' '))
                if (!p.empty()) c.parents.push_back(p);
            c.message = fields[7];
            commits.push_back(std::move(c));
        }
        return commits;
    }

    std::vector<TreeEntry> list_tree(const std::string& rev = "HEAD") const {
        if (!has_commits()) return {};
        CommandResult r = git({"ls-tree", "-r", "-z", "--name-only", rev});
        if (r.exit_code != 0) throw GitError("git ls-tree failed: " + r.err);
        std::vector<TreeEntry> entries;
        for (const std::string& name : split(r.out, '\0'))
            if (!name.empty()) entries.push_back({name, TreeEntry::Kind::File});
        return entries;
    }

    // Root .gitignore of the given revision; absent file yields no lines.
    std::vector<std::string> read_gitignore(const std::string& rev = "HEAD") const {
        if (!has_commits()) return {};
        CommandResult r = git({"show", rev + ":.gitignore"});
        if (r.exit_code != 0) return {};
        return split_lines(r.out);
    }

    struct FirstIntroduction {
        std::string path;
        std::string commit;
        std::int64_t timestamp = 0;
    };

    // Walks history oldest-first and records when each path first appears.
    std::vector<FirstIntroduction> first_introductions() const {
        if (!has_commits()) return {};
        CommandResult r = git({"log", "HEAD", "--reverse", "--format=%H %at"});
        if (r.exit_code != 0) throw GitError("git log failed: " + r.err);

        std::vector<FirstIntroduction> out;
        std::set<std::string> seen;
        for (const std::string& line : split_lines(r.out)) {
            if (line.empty()) continue;
            size_t sp = line.find(' ');
            if (sp == std::string::npos) continue;
            std::string sha = line.substr(0, sp);
            std::int64_t ts = std::atoll(line.c_str() + sp + 1);
            CommandResult lt = git({"ls-tree", "-r", "-z", "--name-only", sha});
            if (lt.exit_code != 0) continue;
            for (const std::string& name : split(lt.out, '\0'))
                if (!name.empty() && seen.insert(name).second) out.push_back({name, sha, ts});
        }
        return out;
    }

  private:
    CommandResult git(std::vector<std::string> args) const {
        std::vector<std::string> argv = {"git", "-C", path_};
        argv.insert(argv.end(), std::make_move_iterator(args.begin()),
                    std::make_move_iterator(args.end()));
        return run_command(argv);
    }

    std::string path_;
};

}  // namespace agentscan
