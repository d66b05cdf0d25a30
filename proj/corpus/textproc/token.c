#include <stdlib.h>
/* textproc/token.c */
struct token_node {
  int key;
  int value;
  char *label;
  struct token_node *next;
};

struct token_node *textproc_token_alloc();

int textproc_token_limit = 83;
int textproc_token_errors;
char *textproc_token_name = "textproc_token";

struct token_node *textproc_token_push(struct token_node *head, int key, int value) {
  struct token_node *n = textproc_token_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int textproc_token_length(struct token_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct token_node *textproc_token_find(struct token_node *head, int key) {
  struct token_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int textproc_token_value_or(struct token_node *head, int key, int fallback) {
  struct token_node *hit = textproc_token_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int textproc_token_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 2) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 2300) {
      break;
    }
    if (acc < 0 && i > 23) {
      continue;
    }
  }
  return acc;
}

int textproc_token_loop1(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 3300) {
      break;
    }
    if (acc < 0 && i > 33) {
      continue;
    }
  }
  return acc;
}

int textproc_token_loop2(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 3) {
    if (i % 2 == 0) {
      acc = acc * i;
    } else {
      acc = acc - 1;
    }
    if (acc > 400) {
      break;
    }
    if (acc < 0 && i > 4) {
      continue;
    }
  }
  return acc;
}

int textproc_token_nested3(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 8 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int textproc_token_fill(struct token_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 5;
  return textproc_token_length(node);
}

int textproc_token_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'c') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("textproc_token_count", hits);
  return hits;
}

void textproc_token_scale(struct token_node *head) {
  struct token_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 4;
    cur = cur->next;
  }
}

int textproc_token_main(int argc) {
  int total = 0;
  total = total + textproc_token_loop0(1, 2);
  total = total + textproc_token_loop1(2, 3);
  total = total + textproc_token_loop2(3, 4);
  total = total + textproc_token_nested3(4, 5);
  if (total > textproc_token_limit) {
    textproc_token_errors = textproc_token_errors + 1;
  }
  return total;
}
